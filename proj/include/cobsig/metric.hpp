#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cobsig/complex.hpp"
#include "cobsig/field.hpp"

namespace cobsig {

enum class MetricSource { induced, deformed };

// Simplices with volume below kVolumeEpsilon * (mean edge length)^d are
// treated as degenerate.
inline constexpr double kVolumeEpsilon = 1e-10;

// Discrete Riemannian metric: one positive length per edge of the complex.
// Edge order matches CobordismComplex::edges().
class MetricField {
 public:
  MetricField(std::shared_ptr<const std::vector<Edge>> edges, std::vector<double> lengths, MetricSource source);

  const std::vector<Edge>& edges() const { return *edges_; }
  std::span<const double> lengths() const { return lengths_; }
  MetricSource source() const { return source_; }

  std::optional<double> find(Index a, Index b) const;
  // Throws MetricError when the edge is absent.
  double length(Index a, Index b) const;

 private:
  std::shared_ptr<const std::vector<Edge>> edges_;
  std::vector<double> lengths_;
  MetricSource source_;
};

// Euclidean distances between ambient coordinates.
MetricField induced_metric(const CobordismComplex& complex);

// Wraps explicit edge lengths after checking positivity and nondegeneracy.
MetricField make_metric(const CobordismComplex& complex, std::vector<double> lengths,
                        MetricSource source = MetricSource::deformed);

// Throws MetricError if a top simplex is degenerate or violates the simplex
// inequalities.
void check_nondegenerate(const CobordismComplex& complex, const MetricField& metric);

// Pointwise conformal change g -> a*g. Each edge is scaled by the square root
// of the mean of its endpoint factors.
MetricField conformal_scale(const CobordismComplex& complex, const MetricField& metric, const ScalarField& a);

// Volume of a k-simplex from its squared edge lengths, listed for vertex pairs
// (0,1),(0,2),...,(0,k),(1,2),...,(k-1,k). Throws MetricError when the
// Cayley-Menger determinant has the wrong sign.
double simplex_volume_from_squared(std::span<const double> squared, int k);

double simplex_volume(const MetricField& metric, std::span<const Index> simplex);

std::vector<double> top_simplex_volumes(const CobordismComplex& complex, const MetricField& metric);
ScalarField lumped_vertex_volume(const CobordismComplex& complex, const MetricField& metric);
double total_volume(const CobordismComplex& complex, const MetricField& metric);
double region_volume(const CobordismComplex& complex, const MetricField& metric, Region region);

}  // namespace cobsig
