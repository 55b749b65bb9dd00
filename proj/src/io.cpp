#include "axiflow/io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <system_error>
#include <unistd.h>

#include "axiflow/error.hpp"

namespace axiflow {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string diagnostics_csv(const std::vector<DiagnosticsRow>& rows) {
  std::string out = kDiagnosticsHeader;
  out += '\n';
  for (const auto& r : rows) {
    for (double v : {r.t, r.E, r.A, r.V, r.Wh, r.ratio, r.max_r, r.z_extent, r.lambda_A, r.lambda_V}) {
      out += format_number(v);
      out += ',';
    }
    out += std::to_string(r.newton_iters);
    out += '\n';
  }
  return out;
}

std::string profile_csv(const Curve& curve) {
  std::string out = "q,r,z\n";
  const auto& topo = curve.topology();
  for (int i = 0; i < curve.nodes(); ++i) {
    out += format_number(topo.node_param(i)) + ',' + format_number(curve[i].r) + ',' +
           format_number(curve[i].z) + '\n';
  }
  return out;
}

std::string surface_obj(const Curve& curve, int n_theta) {
  if (n_theta < 3) throw InvalidArgument("OBJ export needs at least 3 azimuthal segments");
  const auto& topo = curve.topology();
  const int n = curve.nodes();
  std::vector<int> first(n);  // 1-based index of the node's first vertex
  std::vector<bool> pole(n);
  std::string out;
  int next = 1;
  for (int i = 0; i < n; ++i) {
    pole[i] = topo.is_axis(i);
    first[i] = next;
    const Vec2 x = curve[i];
    if (pole[i]) {
      out += "v 0 " + format_number(x.z) + " 0\n";
      ++next;
      continue;
    }
    for (int k = 0; k < n_theta; ++k) {
      const double th = 2.0 * std::numbers::pi * k / n_theta;
      out += "v " + format_number(x.r * std::cos(th)) + ' ' + format_number(x.z) + ' ' +
             format_number(x.r * std::sin(th)) + '\n';
      ++next;
    }
  }
  auto vid = [&](int node, int k) { return pole[node] ? first[node] : first[node] + (k % n_theta); };
  auto face = [&](int a, int b, int c) {
    out += "f " + std::to_string(a) + ' ' + std::to_string(b) + ' ' + std::to_string(c) + '\n';
  };
  for (int e = 0; e < topo.elements(); ++e) {
    const int a = topo.left(e), b = topo.right(e);
    if (pole[a] && pole[b]) continue;
    for (int k = 0; k < n_theta; ++k) {
      if (pole[a]) {
        face(vid(a, k), vid(b, k), vid(b, k + 1));
      } else if (pole[b]) {
        face(vid(a, k), vid(b, k), vid(a, k + 1));
      } else {
        face(vid(a, k), vid(b, k), vid(b, k + 1));
        face(vid(a, k), vid(b, k + 1), vid(a, k + 1));
      }
    }
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + tmp.string() + "' for writing");
    os << content;
    os.flush();
    if (!os) throw IoError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

}  // namespace axiflow
