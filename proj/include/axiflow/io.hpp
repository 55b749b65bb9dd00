#pragma once

#include <string>
#include <vector>

#include "axiflow/driver.hpp"
#include "axiflow/mesh.hpp"

namespace axiflow {

inline constexpr const char* kDiagnosticsHeader =
    "t,E,A,V,Wh,ratio,max_r,z_extent,lambda_A,lambda_V,newton_iters";

// Shortest round-trip-safe decimal with 17 significant digits, locale independent.
std::string format_number(double v);

std::string diagnostics_csv(const std::vector<DiagnosticsRow>& rows);
// Columns q,r,z.
std::string profile_csv(const Curve& curve);
// Surface of revolution: vertices (r cos th, z, r sin th), triangles only,
// axis nodes emitted once.
std::string surface_obj(const Curve& curve, int n_theta = 64);

// Writes via a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace axiflow
