#pragma once

#include <utility>
#include <vector>

#include "cobsig/field.hpp"
#include "cobsig/geodesy.hpp"
#include "cobsig/signal.hpp"

namespace cobsig {

// Noise region U = {x : ρ_g(x, p) < delta} with the bump factor a_ε equal to
// epsilon on the closed delta0-ball and 1 outside the open delta-ball.
struct NoiseSpec {
  Index center = 0;
  double delta0 = 0.0;
  double delta = 0.0;
  double epsilon = 0.5;
};

// Checks 0 < delta0 < delta, 0 < epsilon < 1, a valid center, and that the
// closed delta-ball around the center contains no vertex of the closures of A
// and X. Throws InvalidArgument otherwise.
void check_noise_spec(const Signal& signal, const NoiseSpec& spec);

// Quintic smoothstep 6t^5 - 15t^4 + 10t^3 on [0, 1].
double smoothstep(double t);

// a_ε for a single distance-to-center value. Exactly epsilon for rho <= delta0
// and exactly 1 for rho >= delta.
double bump_value(double rho, const NoiseSpec& spec);

// ρ_g(·, center) at Steiner level `steiner_level`.
ScalarField center_distance(const Signal& signal, Index center, int steiner_level = kDefaultSteinerLevel);

ScalarField bump_field(const Signal& signal, const NoiseSpec& spec, int steiner_level = kDefaultSteinerLevel);
ScalarField bump_field(const ScalarField& center_distance, const NoiseSpec& spec);

// The noisy signal M_h with h = a_ε g. Edges with both endpoints outside the
// open delta-ball keep their length bit for bit.
Signal apply_noise(const Signal& signal, const NoiseSpec& spec, int steiner_level = kDefaultSteinerLevel);

struct FilteredSignal {
  Signal signal;
  // Vertex i of the filter is vertex parent_vertices[i] of the source signal.
  std::vector<Index> parent_vertices;
  // Indices of the kept top simplices in the source signal.
  std::vector<std::size_t> kept_simplices;
};

// Sub-signal spanned by the kept top simplices. Boundary facets inherited from
// M keep their tag, and facets exposed by the cut are tagged B. Requires every
// A facet to survive and the corner strata A∩X and A∩Y to be unchanged.
FilteredSignal extract_filter(const Signal& signal, std::vector<std::size_t> kept_simplices);

// Pairs (vertex of Y in M, vertex of X' in M') that are glued together.
struct Correspondence {
  std::vector<std::pair<Index, Index>> vertex_map;
  double tolerance = 1e-9;
};

// Glues M' onto M along Y = X'. The result has X'' = X, Y'' = Y',
// A'' = A ∪ A', B'' = B ∪ B'. Vertices of M keep their indices; the remaining
// vertices of M' follow in their original order.
Signal compose(const Signal& lower, const Signal& upper, const Correspondence& corr);

}  // namespace cobsig
