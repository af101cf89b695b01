#include "cobsig/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cobsig/error.hpp"

namespace cobsig {

namespace {

constexpr double kPi = std::numbers::pi;

double det3(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  const double v[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
  const double w[3] = {d[0] - a[0], d[1] - a[1], d[2] - a[2]};
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
         u[2] * (v[0] * w[1] - v[1] * w[0]);
}

Hints planar_hints(double w, double h, std::array<double, 2> o) {
  // f_A = x - ox, f_X = y - oy on an axis-aligned box.
  (void)o;
  const double diag = std::hypot(w, h);
  return Hints{{"E", h * w * w / 2.0}, {"EF", w * h * h / 2.0}, {"i_A", w},      {"i_X", h},
               {"vol_M", w * h},       {"vol_A", h},            {"vol_X", w},    {"diam_M", diag},
               {"diam_A", h},          {"diam_X", w}};
}

Hints shell_hints(double r0, double r1, double h) {
  const double vol = kPi * (r1 * r1 - r0 * r0) * h;
  auto ef = [&](double r) { return r * r * r / 3.0 - r0 * r * r / 2.0; };
  // Geodesics on the annulus bottom wrap around the inner hole.
  const double diam_a = 2.0 * std::sqrt(r1 * r1 - r0 * r0) + r0 * (kPi - 2.0 * std::acos(r0 / r1));
  return Hints{{"E", vol * h / 2.0},
               {"EF", 2.0 * kPi * h * (ef(r1) - ef(r0))},
               {"i_A", h},
               {"i_X", r1 - r0},
               {"vol_M", vol},
               {"vol_A", kPi * (r1 * r1 - r0 * r0)},
               {"vol_X", 2.0 * kPi * r0 * h},
               {"diam_M", std::hypot(h, diam_a)},
               {"diam_A", diam_a},
               {"diam_X", std::hypot(h, kPi * r0)}};
}

}  // namespace

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::square: return "square";
    case GeneratorKind::rectangle: return "rectangle";
    case GeneratorKind::annular_shell: return "annular_shell";
  }
  return "?";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  if (name == "square") return GeneratorKind::square;
  if (name == "rectangle") return GeneratorKind::rectangle;
  if (name == "annular_shell" || name == "shell") return GeneratorKind::annular_shell;
  throw InvalidArgument("unknown generator kind '" + std::string(name) + "'");
}

void check_generator_spec(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::square:
      if (spec.resolution < 2) throw InvalidArgument("square resolution must be >= 2");
      break;
    case GeneratorKind::rectangle:
      if (spec.resolution < 2) throw InvalidArgument("rectangle resolution must be >= 2");
      if (!(spec.width > 0.0) || !(spec.height > 0.0)) throw InvalidArgument("rectangle sides must be positive");
      break;
    case GeneratorKind::annular_shell:
      if (spec.resolution < 8) throw InvalidArgument("shell resolution must be >= 8");
      if (!(spec.r0 > 0.0) || !(spec.r0 < spec.r1)) throw InvalidArgument("shell radii must satisfy 0 < r0 < r1");
      if (!(spec.height > 0.0)) throw InvalidArgument("shell height must be positive");
      break;
  }
}

Signal gen_rectangle(double width, double height, int n, std::array<double, 2> origin) {
  if (n < 2) throw InvalidArgument("rectangle resolution must be >= 2");
  if (!(width > 0.0) || !(height > 0.0)) throw InvalidArgument("rectangle sides must be positive");
  const int nx = n;
  const int ny = std::max(1, static_cast<int>(std::lround(n * height / width)));
  auto id = [&](int i, int j) { return static_cast<Index>(j * (nx + 1) + i); };

  std::vector<Point> verts;
  verts.reserve(static_cast<std::size_t>((nx + 1) * (ny + 1)));
  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      verts.push_back({origin[0] + width * i / nx, origin[1] + height * j / ny});
    }
  }
  std::vector<OrientedSimplex> tris;
  tris.reserve(static_cast<std::size_t>(2 * nx * ny));
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      tris.push_back({{id(i, j), id(i + 1, j), id(i + 1, j + 1)}, 1});
      tris.push_back({{id(i, j), id(i + 1, j + 1), id(i, j + 1)}, 1});
    }
  }
  LabelMap labels;
  for (int i = 0; i < nx; ++i) {
    labels[Region::X].push_back({id(i, 0), id(i + 1, 0)});
    labels[Region::Y].push_back({id(i, ny), id(i + 1, ny)});
  }
  for (int j = 0; j < ny; ++j) {
    labels[Region::A].push_back({id(0, j), id(0, j + 1)});
    labels[Region::B].push_back({id(nx, j), id(nx, j + 1)});
  }
  return make_signal(CobordismComplex::build(std::move(verts), std::move(tris), std::move(labels)),
                     planar_hints(width, height, origin));
}

Signal gen_square(int n) {
  if (n < 2) throw InvalidArgument("square resolution must be >= 2");
  return gen_rectangle(1.0, 1.0, n);
}

Signal gen_annular_shell(double r0, double r1, double height, int res) {
  if (res < 8) throw InvalidArgument("shell resolution must be >= 8");
  if (!(r0 > 0.0) || !(r0 < r1)) throw InvalidArgument("shell radii must satisfy 0 < r0 < r1");
  if (!(height > 0.0)) throw InvalidArgument("shell height must be positive");

  const int nt = res;
  const double h_theta = 2.0 * kPi * 0.5 * (r0 + r1) / nt;
  const int nr = std::max(2, static_cast<int>(std::ceil((r1 - r0) / h_theta - 1e-9)));
  const int nz = std::max(2, static_cast<int>(std::ceil(height / h_theta - 1e-9)));
  auto id = [&](int t, int r, int z) {
    return static_cast<Index>(((t % nt) * (nr + 1) + r) * (nz + 1) + z);
  };

  std::vector<Point> verts;
  verts.reserve(static_cast<std::size_t>(nt * (nr + 1) * (nz + 1)));
  for (int t = 0; t < nt; ++t) {
    const double th = 2.0 * kPi * t / nt;
    for (int r = 0; r <= nr; ++r) {
      const double rad = r0 + (r1 - r0) * r / nr;
      for (int z = 0; z <= nz; ++z) {
        verts.push_back({rad * std::cos(th), rad * std::sin(th), height * z / nz});
      }
    }
  }

  // Kuhn subdivision of each (θ, r, z) cell along the main diagonal.
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<OrientedSimplex> tets;
  tets.reserve(static_cast<std::size_t>(6 * nt * nr * nz));
  for (int t = 0; t < nt; ++t) {
    for (int r = 0; r < nr; ++r) {
      for (int z = 0; z < nz; ++z) {
        for (const auto& perm : kPerms) {
          int c[3] = {t, r, z};
          std::vector<Index> tv{id(c[0], c[1], c[2])};
          for (int axis : perm) {
            ++c[axis];
            tv.push_back(id(c[0], c[1], c[2]));
          }
          const double det = det3(verts[tv[0]], verts[tv[1]], verts[tv[2]], verts[tv[3]]);
          tets.push_back({std::move(tv), det > 0.0 ? 1 : -1});
        }
      }
    }
  }

  LabelMap labels;
  auto quad = [&](Region reg, Index a, Index b, Index c, Index d) {
    // Kuhn cells split every boundary quad along the a-d diagonal.
    labels[reg].push_back({a, b, d});
    labels[reg].push_back({a, c, d});
  };
  for (int t = 0; t < nt; ++t) {
    for (int z = 0; z < nz; ++z) {
      quad(Region::X, id(t, 0, z), id(t + 1, 0, z), id(t, 0, z + 1), id(t + 1, 0, z + 1));
      quad(Region::Y, id(t, nr, z), id(t + 1, nr, z), id(t, nr, z + 1), id(t + 1, nr, z + 1));
    }
    for (int r = 0; r < nr; ++r) {
      quad(Region::A, id(t, r, 0), id(t + 1, r, 0), id(t, r + 1, 0), id(t + 1, r + 1, 0));
      quad(Region::B, id(t, r, nz), id(t + 1, r, nz), id(t, r + 1, nz), id(t + 1, r + 1, nz));
    }
  }
  return make_signal(CobordismComplex::build(std::move(verts), std::move(tets), std::move(labels)),
                     shell_hints(r0, r1, height));
}

Signal generate(const GeneratorSpec& spec) {
  check_generator_spec(spec);
  switch (spec.kind) {
    case GeneratorKind::square: return gen_square(spec.resolution);
    case GeneratorKind::rectangle: return gen_rectangle(spec.width, spec.height, spec.resolution, spec.origin);
    case GeneratorKind::annular_shell: return gen_annular_shell(spec.r0, spec.r1, spec.height, spec.resolution);
  }
  throw InvalidArgument("unknown generator kind");
}

Hints analytic_hints(const GeneratorSpec& spec) {
  check_generator_spec(spec);
  switch (spec.kind) {
    case GeneratorKind::square: return planar_hints(1.0, 1.0, {0.0, 0.0});
    case GeneratorKind::rectangle: return planar_hints(spec.width, spec.height, spec.origin);
    case GeneratorKind::annular_shell: return shell_hints(spec.r0, spec.r1, spec.height);
  }
  return {};
}

Correspondence stack_correspondence(const Signal& lower, const Signal& upper, double tolerance) {
  const auto ys = region_vertices(lower.complex(), Region::Y);
  const auto xs = region_vertices(upper.complex(), Region::X);
  Correspondence corr;
  corr.tolerance = tolerance;
  for (Index y : ys) {
    const auto& p = lower.complex().vertex(y);
    Index best = 0;
    double best_d = kInfinity;
    for (Index x : xs) {
      const auto& q = upper.complex().vertex(x);
      double sq = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) sq += (p[i] - q[i]) * (p[i] - q[i]);
      if (sq < best_d) {
        best_d = sq;
        best = x;
      }
    }
    corr.vertex_map.emplace_back(y, best);
  }
  return corr;
}

Index nearest_vertex(const CobordismComplex& complex, const Point& point) {
  Index best = 0;
  double best_d = kInfinity;
  for (Index v = 0; v < complex.num_vertices(); ++v) {
    const auto& q = complex.vertex(v);
    double sq = 0.0;
    for (std::size_t i = 0; i < q.size() && i < point.size(); ++i) sq += (q[i] - point[i]) * (q[i] - point[i]);
    if (sq < best_d) {
      best_d = sq;
      best = v;
    }
  }
  return best;
}

}  // namespace cobsig
