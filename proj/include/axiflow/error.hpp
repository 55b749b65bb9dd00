#pragma once

#include <stdexcept>
#include <string>

namespace axiflow {

enum class ErrorCode {
  invalid_argument = 1,
  degenerate_mesh,
  singular_system,
  newton_failure,
  domain_error,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::invalid_argument, what) {}
};

class DegenerateMesh : public Error {
 public:
  DegenerateMesh(int element, const std::string& what)
      : Error(ErrorCode::degenerate_mesh, what), element_(element) {}
  int element() const noexcept { return element_; }

 private:
  int element_;
};

class SingularSystem : public Error {
 public:
  explicit SingularSystem(const std::string& what) : Error(ErrorCode::singular_system, what) {}
};

class NewtonFailure : public Error {
 public:
  explicit NewtonFailure(const std::string& what) : Error(ErrorCode::newton_failure, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::domain_error, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::io_error, what) {}
};

}  // namespace axiflow
