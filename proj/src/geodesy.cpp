#include "cobsig/geodesy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <tuple>

#include "cobsig/error.hpp"

namespace cobsig {

namespace {

struct RawArc {
  Index a;
  Index b;
  double w;
};

using QueueItem = std::pair<double, Index>;
using MinQueue = std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>>;

std::vector<std::vector<Index>> top_cells(const CobordismComplex& c) {
  std::vector<std::vector<Index>> cells;
  cells.reserve(c.simplices().size());
  for (const auto& s : c.simplices()) cells.push_back(s.verts);
  return cells;
}

}  // namespace

SteinerGraph SteinerGraph::build(std::size_t num_vertices, const std::vector<std::vector<Index>>& cells,
                                 const MetricField& metric, int level) {
  if (level < 0 || level > 6) throw InvalidArgument("steiner level must be in [0, 6]");

  std::vector<Edge> edges;
  for (const auto& cell : cells) {
    for (std::size_t i = 0; i < cell.size(); ++i) {
      for (std::size_t j = i + 1; j < cell.size(); ++j) {
        edges.push_back({std::min(cell[i], cell[j]), std::max(cell[i], cell[j])});
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  const Index parts = Index{1} << level;
  const Index interior = parts - 1;
  auto edge_id = [&](Index a, Index b) {
    const Edge key{std::min(a, b), std::max(a, b)};
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), key) - edges.begin());
  };
  // Node of the t-th subdivision point (1 <= t < parts) counted from edge.u.
  auto sub_node = [&](std::size_t e, Index t) {
    return static_cast<Index>(num_vertices + e * interior + (t - 1));
  };

  std::vector<RawArc> raw;
  std::vector<double> edge_len(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const double len = metric.length(edges[e].u, edges[e].v);
    edge_len[e] = len;
    const double piece = len / parts;
    Index prev = edges[e].u;
    for (Index t = 1; t < parts; ++t) {
      const Index node = sub_node(e, t);
      raw.push_back({prev, node, piece});
      prev = node;
    }
    raw.push_back({prev, edges[e].v, piece});
  }

  if (level >= 1) {
    struct CellPoint {
      Index node;
      std::vector<double> bary;
      // Local edges (i, j) the point lies on, encoded i * 8 + j.
      std::vector<int> on_edges;
    };
    std::vector<CellPoint> points;
    std::vector<double> sq;
    for (const auto& cell : cells) {
      const std::size_t n = cell.size();
      if (n < 3) continue;
      sq.assign(n * n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const double l = edge_len[edge_id(cell[i], cell[j])];
          sq[i * n + j] = sq[j * n + i] = l * l;
        }
      }
      points.clear();
      for (std::size_t i = 0; i < n; ++i) {
        CellPoint p{cell[i], std::vector<double>(n, 0.0), {}};
        p.bary[i] = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) p.on_edges.push_back(static_cast<int>(std::min(i, j) * 8 + std::max(i, j)));
        }
        points.push_back(std::move(p));
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const std::size_t e = edge_id(cell[i], cell[j]);
          // Subdivision points are numbered from the lower global index.
          const bool i_is_u = cell[i] < cell[j];
          for (Index t = 1; t < parts; ++t) {
            const double alpha = static_cast<double>(t) / parts;
            CellPoint p{sub_node(e, t), std::vector<double>(n, 0.0), {static_cast<int>(i * 8 + j)}};
            p.bary[i_is_u ? i : j] = 1.0 - alpha;
            p.bary[i_is_u ? j : i] = alpha;
            points.push_back(std::move(p));
          }
        }
      }
      for (std::size_t p = 0; p < points.size(); ++p) {
        for (std::size_t q = p + 1; q < points.size(); ++q) {
          const auto& ep = points[p].on_edges;
          const auto& eq = points[q].on_edges;
          const bool share = std::any_of(ep.begin(), ep.end(), [&](int e) {
            return std::find(eq.begin(), eq.end(), e) != eq.end();
          });
          if (share) continue;
          // |sum w_i x_i|^2 = -1/2 sum_ij w_i w_j |x_i - x_j|^2 for sum w_i = 0.
          double len2 = 0.0;
          for (std::size_t a = 0; a < n; ++a) {
            const double wa = points[p].bary[a] - points[q].bary[a];
            if (wa == 0.0) continue;
            for (std::size_t b = 0; b < n; ++b) {
              len2 -= 0.5 * wa * (points[p].bary[b] - points[q].bary[b]) * sq[a * n + b];
            }
          }
          raw.push_back({std::min(points[p].node, points[q].node), std::max(points[p].node, points[q].node),
                         std::sqrt(std::max(len2, 0.0))});
        }
      }
    }
  }

  // Canonical orientation, then keep the shortest copy of duplicated arcs.
  for (auto& r : raw) {
    if (r.a > r.b) std::swap(r.a, r.b);
  }
  std::sort(raw.begin(), raw.end(),
            [](const RawArc& x, const RawArc& y) { return std::tie(x.a, x.b, x.w) < std::tie(y.a, y.b, y.w); });
  raw.erase(std::unique(raw.begin(), raw.end(), [](const RawArc& x, const RawArc& y) { return x.a == y.a && x.b == y.b; }),
            raw.end());

  SteinerGraph g;
  g.num_vertices_ = num_vertices;
  g.level_ = level;
  const std::size_t num_nodes = num_vertices + edges.size() * interior;
  std::vector<std::size_t> degree(num_nodes, 0);
  for (const auto& r : raw) {
    ++degree[r.a];
    ++degree[r.b];
  }
  g.offsets_.assign(num_nodes + 1, 0);
  for (std::size_t i = 0; i < num_nodes; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  g.targets_.resize(g.offsets_.back());
  g.weights_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& r : raw) {
    g.targets_[fill[r.a]] = r.b;
    g.weights_[fill[r.a]++] = r.w;
    g.targets_[fill[r.b]] = r.a;
    g.weights_[fill[r.b]++] = r.w;
  }
  return g;
}

SteinerGraph SteinerGraph::for_signal(const Signal& signal, int level) {
  return build(signal.complex().num_vertices(), top_cells(signal.complex()), signal.metric(), level);
}

SteinerGraph SteinerGraph::for_region(const Signal& signal, Region region, int level) {
  const auto& facets = signal.complex().labeled(region);
  std::vector<std::vector<Index>> cells(facets.begin(), facets.end());
  return build(signal.complex().num_vertices(), cells, signal.metric(), level);
}

std::vector<SteinerGraph::Arc> SteinerGraph::arcs(Index node) const {
  std::vector<Arc> out;
  for (std::size_t i = offsets_[node]; i < offsets_[node + 1]; ++i) out.push_back({targets_[i], weights_[i]});
  return out;
}

SteinerGraph::Paths SteinerGraph::shortest_paths(std::span<const Index> sources, double cutoff) const {
  Paths p;
  p.dist.assign(num_nodes(), kInfinity);
  p.nearest.assign(num_nodes(), static_cast<Index>(-1));
  MinQueue queue;
  std::vector<Index> sorted(sources.begin(), sources.end());
  std::sort(sorted.begin(), sorted.end());
  for (Index s : sorted) {
    if (s >= num_nodes()) throw InvalidArgument("source vertex out of range");
    if (p.dist[s] == 0.0) continue;
    p.dist[s] = 0.0;
    p.nearest[s] = s;
    queue.emplace(0.0, s);
  }
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > p.dist[u]) continue;
    if (d > cutoff) break;
    for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
      const Index v = targets_[i];
      const double nd = d + weights_[i];
      if (nd < p.dist[v]) {
        p.dist[v] = nd;
        p.nearest[v] = p.nearest[u];
        queue.emplace(nd, v);
      }
    }
  }
  if (cutoff < kInfinity) {
    for (auto& d : p.dist) {
      if (d > cutoff) d = kInfinity;
    }
  }
  return p;
}

double SteinerGraph::distance(Index from, Index to, double cutoff) const {
  // Point-to-point search with early exit; touches only the explored ball.
  std::map<Index, double> dist;
  MinQueue queue;
  dist[from] = 0.0;
  queue.emplace(0.0, from);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    if (d > cutoff) return kInfinity;
    if (u == to) return d;
    for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
      const Index v = targets_[i];
      const double nd = d + weights_[i];
      auto it = dist.find(v);
      if (it == dist.end() || nd < it->second) {
        dist[v] = nd;
        queue.emplace(nd, v);
      }
    }
  }
  return kInfinity;
}

ScalarField vertex_distances(const SteinerGraph& graph, const SteinerGraph::Paths& paths) {
  ScalarField f(std::vector<double>(paths.dist.begin(), paths.dist.begin() + graph.num_vertices()));
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (!std::isfinite(f[v])) throw StructureError("vertex " + std::to_string(v) + " is unreachable");
  }
  return f;
}

ScalarField distance_from_vertices(const Signal& signal, std::span<const Index> sources, int steiner_level) {
  if (sources.empty()) throw InvalidArgument("distance field needs a nonempty source set");
  const auto graph = SteinerGraph::for_signal(signal, steiner_level);
  return vertex_distances(graph, graph.shortest_paths(sources));
}

ScalarField distance_field(const Signal& signal, Region region, int steiner_level) {
  const auto sources = region_vertices(signal.complex(), region);
  if (sources.empty()) throw InvalidArgument("region " + std::string(to_string(region)) + " is empty");
  return distance_from_vertices(signal, sources, steiner_level);
}

double diameter_all_pairs(const SteinerGraph& graph, std::span<const Index> subset) {
  if (subset.empty()) throw InvalidArgument("diameter of an empty set");
  double best = 0.0;
  for (Index s : subset) {
    const Index src[] = {s};
    const auto p = graph.shortest_paths(src);
    for (Index t : subset) {
      if (!std::isfinite(p.dist[t])) throw StructureError("subset is not connected");
      best = std::max(best, p.dist[t]);
    }
  }
  return best;
}

double diameter(const SteinerGraph& graph, std::span<const Index> subset_in) {
  std::vector<Index> subset(subset_in.begin(), subset_in.end());
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty()) throw InvalidArgument("diameter of an empty set");
  const std::size_t n = subset.size();
  std::vector<double> lo(n, 0.0), hi(n, kInfinity);
  std::vector<bool> active(n, true);
  double lower = 0.0;
  bool take_high = true;

  for (;;) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (pick == n || (take_high ? hi[i] > hi[pick] : lo[i] < lo[pick])) pick = i;
    }
    if (pick == n) break;
    take_high = !take_high;

    const Index src[] = {subset[pick]};
    const auto p = graph.shortest_paths(src);
    double ecc = 0.0;
    for (Index t : subset) {
      if (!std::isfinite(p.dist[t])) throw StructureError("subset is not connected");
      ecc = std::max(ecc, p.dist[t]);
    }
    lower = std::max(lower, ecc);
    active[pick] = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      const double d = p.dist[subset[i]];
      lo[i] = std::max({lo[i], d, ecc - d});
      hi[i] = std::min(hi[i], ecc + d);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (lo[i] == hi[i]) {
        lower = std::max(lower, lo[i]);
        active[i] = false;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (active[i] && hi[i] <= lower) active[i] = false;
    }
  }
  return lower;
}

double diameter(const Signal& signal, std::optional<Region> region, int steiner_level) {
  if (region) {
    const auto subset = region_vertices(signal.complex(), *region);
    if (subset.empty()) throw InvalidArgument("region " + std::string(to_string(*region)) + " is empty");
    return diameter(SteinerGraph::for_region(signal, *region, steiner_level), subset);
  }
  std::vector<Index> all(signal.complex().num_vertices());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Index>(i);
  return diameter(SteinerGraph::for_signal(signal, steiner_level), all);
}

InjectivityEstimate injectivity_radius(const Signal& signal, Region region, int steiner_level, bool use_hint) {
  if (region != Region::A && region != Region::X) {
    throw InvalidArgument("injectivity radius is defined for regions A and X only");
  }
  if (use_hint) {
    if (auto h = signal.hint(region == Region::A ? "i_A" : "i_X")) {
      return {*h, EstimateMethod::analytic, region};
    }
  }

  const auto& complex = signal.complex();
  const auto sources = region_vertices(complex, region);
  if (sources.empty()) throw InvalidArgument("region " + std::string(to_string(region)) + " is empty");
  const auto graph = SteinerGraph::for_signal(signal, steiner_level);
  const auto paths = graph.shortest_paths(sources);
  const auto f = vertex_distances(graph, paths);
  std::vector<bool> in_region(complex.num_vertices(), false);
  for (Index s : sources) in_region[s] = true;

  double best = kInfinity;

  // Feet far apart inside the region although both are near-closest.
  const auto region_graph = SteinerGraph::for_region(signal, region, steiner_level);
  std::map<std::pair<Index, Index>, double> separation;
  const double max_threshold = 2.0 * (1.0 + kCutLocusTolerance) * *std::max_element(f.values.begin(), f.values.end());
  auto feet_apart = [&](Index s1, Index s2) {
    const auto key = std::minmax(s1, s2);
    auto it = separation.find(key);
    if (it == separation.end()) {
      it = separation.emplace(key, region_graph.distance(key.first, key.second, max_threshold)).first;
    }
    return it->second;
  };
  for (const auto& e : complex.edges()) {
    const Index s1 = paths.nearest[e.u];
    const Index s2 = paths.nearest[e.v];
    if (s1 == s2) continue;
    const double sep = feet_apart(s1, s2);
    for (Index w : {e.u, e.v}) {
      if (in_region[w]) continue;
      if (sep > 2.0 * f[w] * (1.0 + kCutLocusTolerance)) best = std::min(best, f[w]);
    }
  }

  // Exit through the opposite stratum.
  const Region opposite = region == Region::A ? Region::B : Region::Y;
  for (Index v : region_vertices(complex, opposite)) {
    if (!in_region[v]) best = std::min(best, f[v]);
  }

  if (!std::isfinite(best)) best = diameter(signal, std::nullopt, steiner_level);
  return {best, EstimateMethod::heuristic, region};
}

}  // namespace cobsig
