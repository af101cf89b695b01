#include "cobsig/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cobsig/error.hpp"

namespace cobsig {

namespace {

// Determinant of a small dense matrix by Gaussian elimination with partial
// pivoting. `m` is row-major n x n and is destroyed.
double determinant(std::vector<double>& m, int n) {
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) pivot = r;
    }
    if (m[pivot * n + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m[col * n + c], m[pivot * n + c]);
      det = -det;
    }
    const double p = m[col * n + col];
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / p;
      for (int c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
    }
  }
  return det;
}

std::size_t pair_slot(int i, int j, int k) {
  // Position of (i, j), i < j, in the lexicographic pair list of k+1 vertices.
  std::size_t slot = 0;
  for (int a = 0; a < i; ++a) slot += static_cast<std::size_t>(k - a);
  return slot + static_cast<std::size_t>(j - i - 1);
}

}  // namespace

MetricField::MetricField(std::shared_ptr<const std::vector<Edge>> edges, std::vector<double> lengths,
                         MetricSource source)
    : edges_(std::move(edges)), lengths_(std::move(lengths)), source_(source) {
  if (!edges_ || edges_->size() != lengths_.size()) {
    throw InvalidArgument("metric length count does not match edge count");
  }
}

std::optional<double> MetricField::find(Index a, Index b) const {
  if (a > b) std::swap(a, b);
  const Edge key{a, b};
  auto it = std::lower_bound(edges_->begin(), edges_->end(), key);
  if (it == edges_->end() || *it != key) return std::nullopt;
  return lengths_[static_cast<std::size_t>(it - edges_->begin())];
}

double MetricField::length(Index a, Index b) const {
  auto l = find(a, b);
  if (!l) throw MetricError("metric has no edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return *l;
}

MetricField induced_metric(const CobordismComplex& complex) {
  std::vector<double> lengths;
  lengths.reserve(complex.edges().size());
  for (const auto& e : complex.edges()) {
    const auto& p = complex.vertex(e.u);
    const auto& q = complex.vertex(e.v);
    double sq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) sq += (p[i] - q[i]) * (p[i] - q[i]);
    if (sq == 0.0) {
      throw MetricError("coincident vertices " + std::to_string(e.u) + " and " + std::to_string(e.v) +
                        " give a zero-length edge");
    }
    lengths.push_back(std::sqrt(sq));
  }
  MetricField metric(complex.shared_edges(), std::move(lengths), MetricSource::induced);
  check_nondegenerate(complex, metric);
  return metric;
}

MetricField make_metric(const CobordismComplex& complex, std::vector<double> lengths, MetricSource source) {
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (!(lengths[i] > 0.0) || !std::isfinite(lengths[i])) {
      throw MetricError("edge " + std::to_string(i) + " has nonpositive length");
    }
  }
  MetricField metric(complex.shared_edges(), std::move(lengths), source);
  check_nondegenerate(complex, metric);
  return metric;
}

double simplex_volume_from_squared(std::span<const double> squared, int k) {
  if (k == 0) return 1.0;
  // Gram matrix of the edge vectors from vertex 0:
  //   G_ij = (|v0 vi|^2 + |v0 vj|^2 - |vi vj|^2) / 2,
  // det G = (k!)^2 V^2. Equivalent to the Cayley-Menger determinant.
  std::vector<double> gram(static_cast<std::size_t>(k * k));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      const double d0i = squared[pair_slot(0, i, k)];
      const double d0j = squared[pair_slot(0, j, k)];
      const double dij = i == j ? 0.0 : squared[pair_slot(std::min(i, j), std::max(i, j), k)];
      gram[static_cast<std::size_t>((i - 1) * k + (j - 1))] = 0.5 * (d0i + d0j - dij);
    }
  }
  const double det = determinant(gram, k);
  if (det < 0.0) throw MetricError("edge lengths violate the simplex inequalities");
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  return std::sqrt(det) / fact;
}

double simplex_volume(const MetricField& metric, std::span<const Index> simplex) {
  const int k = static_cast<int>(simplex.size()) - 1;
  std::vector<double> sq;
  sq.reserve(simplex.size() * (simplex.size() - 1) / 2);
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      const double l = metric.length(simplex[i], simplex[j]);
      sq.push_back(l * l);
    }
  }
  return simplex_volume_from_squared(sq, k);
}

void check_nondegenerate(const CobordismComplex& complex, const MetricField& metric) {
  const int d = complex.dim();
  for (std::size_t s = 0; s < complex.simplices().size(); ++s) {
    const auto& verts = complex.simplices()[s].verts;
    double mean = 0.0;
    int n = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        mean += metric.length(verts[i], verts[j]);
        ++n;
      }
    }
    mean /= n;
    const double vol = simplex_volume(metric, verts);
    if (!(vol > kVolumeEpsilon * std::pow(mean, d))) {
      throw MetricError("top simplex " + std::to_string(s) + " is degenerate (volume " + std::to_string(vol) + ")");
    }
  }
}

MetricField conformal_scale(const CobordismComplex& complex, const MetricField& metric, const ScalarField& a) {
  if (a.size() != complex.num_vertices()) throw InvalidArgument("conformal factor has wrong length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] > 0.0) || !std::isfinite(a[i])) {
      throw InvalidArgument("conformal factor is not positive at vertex " + std::to_string(i));
    }
  }
  const auto& edges = metric.edges();
  std::vector<double> lengths(metric.lengths().begin(), metric.lengths().end());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const double au = a[edges[e].u];
    const double av = a[edges[e].v];
    if (au == 1.0 && av == 1.0) continue;
    lengths[e] *= std::sqrt(0.5 * (au + av));
  }
  return make_metric(complex, std::move(lengths), MetricSource::deformed);
}

std::vector<double> top_simplex_volumes(const CobordismComplex& complex, const MetricField& metric) {
  std::vector<double> vols;
  vols.reserve(complex.simplices().size());
  for (const auto& s : complex.simplices()) vols.push_back(simplex_volume(metric, s.verts));
  return vols;
}

ScalarField lumped_vertex_volume(const CobordismComplex& complex, const MetricField& metric) {
  ScalarField mass(complex.num_vertices(), 0.0);
  const double share = 1.0 / (complex.dim() + 1);
  const auto vols = top_simplex_volumes(complex, metric);
  for (std::size_t s = 0; s < vols.size(); ++s) {
    for (Index v : complex.simplices()[s].verts) mass[v] += share * vols[s];
  }
  return mass;
}

double total_volume(const CobordismComplex& complex, const MetricField& metric) {
  const auto vols = top_simplex_volumes(complex, metric);
  return std::accumulate(vols.begin(), vols.end(), 0.0);
}

double region_volume(const CobordismComplex& complex, const MetricField& metric, Region region) {
  double total = 0.0;
  for (const auto& f : complex.labeled(region)) total += simplex_volume(metric, f);
  return total;
}

}  // namespace cobsig
