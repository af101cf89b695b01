// Brute-force reference values. Deliberately self-contained: nothing here
// touches the mesh, metric, distance or quadrature code.
#include <cmath>
#include <numbers>

#include "cobsig/error.hpp"
#include "cobsig/verify.hpp"

namespace cobsig {

namespace {

constexpr double kPi = std::numbers::pi;

OracleResult box_oracle(double w, double h, int n) {
  // f_A(x, y) = x, f_X(x, y) = y on [0, w] x [0, h].
  const int nx = n;
  const int ny = std::max(1, static_cast<int>(std::lround(n * h / w)));
  const double dx = w / nx;
  const double dy = h / ny;
  OracleResult r;
  for (int j = 0; j < ny; ++j) {
    const double y = (j + 0.5) * dy;
    for (int i = 0; i < nx; ++i) {
      const double x = (i + 0.5) * dx;
      const double cell = dx * dy;
      r.energy += x * cell;
      r.fourier_energy += y * cell;
      r.vol_m += cell;
    }
  }
  for (int j = 0; j < ny; ++j) r.vol_a += dy;
  for (int i = 0; i < nx; ++i) r.vol_x += dx;
  r.diam_m = std::hypot(w, h);
  r.diam_a = h;
  r.diam_x = w;
  return r;
}

OracleResult shell_oracle(double r0, double r1, double h, int n) {
  // f_A = z, f_X = r - r0; volume element r dr dθ dz with the θ-integral exact.
  const int nr = n;
  const int nz = n;
  const double dr = (r1 - r0) / nr;
  const double dz = h / nz;
  OracleResult res;
  for (int k = 0; k < nz; ++k) {
    const double z = (k + 0.5) * dz;
    for (int i = 0; i < nr; ++i) {
      const double r = r0 + (i + 0.5) * dr;
      const double cell = 2.0 * kPi * r * dr * dz;
      res.energy += z * cell;
      res.fourier_energy += (r - r0) * cell;
      res.vol_m += cell;
    }
  }
  for (int i = 0; i < nr; ++i) res.vol_a += 2.0 * kPi * (r0 + (i + 0.5) * dr) * dr;
  for (int k = 0; k < nz; ++k) res.vol_x += 2.0 * kPi * r0 * dz;
  // Geodesic diameters: X unrolls to a 2π r0 by h strip with antipodal
  // points at half the circumference; the annulus A wraps around its hole.
  res.diam_x = std::hypot(h, kPi * r0);
  res.diam_a = 2.0 * std::sqrt(r1 * r1 - r0 * r0) + r0 * (kPi - 2.0 * std::acos(r0 / r1));
  res.diam_m = std::hypot(h, res.diam_a);
  return res;
}

}  // namespace

OracleResult grid_oracle(const GeneratorSpec& spec, int fine_resolution) {
  if (fine_resolution < 2) throw InvalidArgument("oracle resolution must be >= 2");
  check_generator_spec(spec);
  OracleResult r;
  switch (spec.kind) {
    case GeneratorKind::square: r = box_oracle(1.0, 1.0, fine_resolution); break;
    case GeneratorKind::rectangle: r = box_oracle(spec.width, spec.height, fine_resolution); break;
    case GeneratorKind::annular_shell: r = shell_oracle(spec.r0, spec.r1, spec.height, fine_resolution); break;
  }
  r.fine_resolution = fine_resolution;
  return r;
}

}  // namespace cobsig
