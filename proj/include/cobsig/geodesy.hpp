#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cobsig/field.hpp"
#include "cobsig/signal.hpp"

namespace cobsig {

inline constexpr int kDefaultSteinerLevel = 2;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Weighted graph approximating geodesics on a simplicial complex.
//
// Nodes [0, num_vertices) are the complex vertices. Every edge of every cell
// is split into 2^level equal sub-edges, adding 2^level - 1 nodes per edge.
// For level >= 1, each cell additionally receives straight chords between
// every pair of its boundary points (vertices and subdivision points) that
// do not lie on a common edge. Chord lengths are intrinsic: they come from the
// cell's edge lengths alone, so the graph works for any metric, including
// conformally deformed ones. Graph distances never undercut the polyhedral
// geodesic distance, and refining the level never increases them.
class SteinerGraph {
 public:
  static SteinerGraph build(std::size_t num_vertices, const std::vector<std::vector<Index>>& cells,
                            const MetricField& metric, int level);
  // Cells are the top simplices.
  static SteinerGraph for_signal(const Signal& signal, int level);
  // Cells are the facets labeled `region`; paths stay inside that stratum.
  static SteinerGraph for_region(const Signal& signal, Region region, int level);

  struct Paths {
    std::vector<double> dist;    // per node; kInfinity if unreached
    std::vector<Index> nearest;  // source reaching the node first; ties to the lower index
  };

  // Multi-source Dijkstra. Ties in the queue break by ascending node index.
  // Nodes farther than `cutoff` are left at kInfinity.
  Paths shortest_paths(std::span<const Index> sources, double cutoff = kInfinity) const;

  // Distance between two nodes, or kInfinity if it exceeds `cutoff`.
  double distance(Index from, Index to, double cutoff = kInfinity) const;

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_nodes() const { return offsets_.size() - 1; }
  std::size_t num_arcs() const { return targets_.size(); }
  int level() const { return level_; }

  struct Arc {
    Index target;
    double weight;
  };
  std::vector<Arc> arcs(Index node) const;

 private:
  std::size_t num_vertices_ = 0;
  int level_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Index> targets_;
  std::vector<double> weights_;
};

// f_R(v) = graph distance from v to the closed region R. Throws if the region
// is empty or a vertex cannot be reached.
ScalarField distance_field(const Signal& signal, Region region, int steiner_level = kDefaultSteinerLevel);
ScalarField distance_from_vertices(const Signal& signal, std::span<const Index> sources,
                                   int steiner_level = kDefaultSteinerLevel);
// Restricts a node distance vector to the complex vertices; throws if any is unreached.
ScalarField vertex_distances(const SteinerGraph& graph, const SteinerGraph::Paths& paths);

// Largest graph distance between two vertices of the subset. For a region the
// paths run inside the region's facets (intrinsic diameter); without a region
// the subset is every vertex and paths run through M.
double diameter(const Signal& signal, std::optional<Region> region = std::nullopt,
                int steiner_level = kDefaultSteinerLevel);

// Exact maximum eccentricity over `subset`, pruned with eccentricity bounds
// (ecc(w) <= ecc(v) + d(v,w), ecc(w) >= max(d(v,w), ecc(v) - d(v,w))), so
// typically only a handful of single-source searches are needed.
double diameter(const SteinerGraph& graph, std::span<const Index> subset);
// All-pairs reference used to cross-check the pruned search.
double diameter_all_pairs(const SteinerGraph& graph, std::span<const Index> subset);

enum class EstimateMethod { analytic, heuristic };

struct InjectivityEstimate {
  double value = 0.0;
  EstimateMethod method = EstimateMethod::heuristic;
  Region region = Region::A;
};

// Relative slack when deciding that two feet of near-minimal paths are far apart.
inline constexpr double kCutLocusTolerance = 0.05;

// Boundary injectivity radius of A or X.
//
// The smooth quantity is the supremum of s such that the inward normal
// exponential map exp⊥(p, t) = γ_p(t), with γ_p(0) = p and γ_p'(0) = N_p, is a
// diffeomorphism on region × [0, s). It fails either where two normal
// geodesics meet (cut locus) or where one leaves M (t >= D(p)).
//
// A generator-provided analytic value is returned when present. Otherwise the
// heuristic is the minimum of f_region(w) over
//  - vertices w adjacent to a vertex whose nearest region vertex differs from
//    w's, when the two feet are more than 2 f(w) (1 + tolerance) apart
//    measured inside the region (approximate cut locus), and
//  - vertices of the opposite stratum (B for A, Y for X) outside the region,
//    where normal geodesics exit M.
// Falls back to diam(M) when no candidate exists.
InjectivityEstimate injectivity_radius(const Signal& signal, Region region, int steiner_level = kDefaultSteinerLevel,
                                       bool use_hint = true);

}  // namespace cobsig
