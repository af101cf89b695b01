#include "cobsig/signalops.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cobsig/error.hpp"

namespace cobsig {

void check_noise_spec(const Signal& signal, const NoiseSpec& spec) {
  if (spec.center >= signal.complex().num_vertices()) throw InvalidArgument("noise center is not a vertex");
  if (!(spec.delta0 > 0.0) || !(spec.delta0 < spec.delta)) {
    throw InvalidArgument("noise radii must satisfy 0 < delta0 < delta");
  }
  if (!(spec.epsilon > 0.0) || !(spec.epsilon < 1.0)) throw InvalidArgument("noise epsilon must lie in (0, 1)");
  const auto rho = center_distance(signal, spec.center);
  for (Region r : {Region::A, Region::X}) {
    for (Index v : region_vertices(signal.complex(), r)) {
      if (rho[v] <= spec.delta) {
        throw InvalidArgument("closed noise ball meets the closure of region " + std::string(to_string(r)) +
                              " at vertex " + std::to_string(v));
      }
    }
  }
}

double smoothstep(double t) {
  t = std::clamp(t, 0.0, 1.0);
  return t * t * t * (t * (6.0 * t - 15.0) + 10.0);
}

double bump_value(double rho, const NoiseSpec& spec) {
  if (rho <= spec.delta0) return spec.epsilon;
  if (rho >= spec.delta) return 1.0;
  const double t = (rho - spec.delta0) / (spec.delta - spec.delta0);
  return spec.epsilon + (1.0 - spec.epsilon) * smoothstep(t);
}

ScalarField center_distance(const Signal& signal, Index center, int steiner_level) {
  const Index src[] = {center};
  return distance_from_vertices(signal, src, steiner_level);
}

ScalarField bump_field(const ScalarField& rho, const NoiseSpec& spec) {
  ScalarField a(rho.size(), 1.0);
  for (std::size_t v = 0; v < rho.size(); ++v) a[v] = bump_value(rho[v], spec);
  return a;
}

ScalarField bump_field(const Signal& signal, const NoiseSpec& spec, int steiner_level) {
  check_noise_spec(signal, spec);
  return bump_field(center_distance(signal, spec.center, steiner_level), spec);
}

Signal apply_noise(const Signal& signal, const NoiseSpec& spec, int steiner_level) {
  const auto a = bump_field(signal, spec, steiner_level);
  return signal.with_metric(conformal_scale(signal.complex(), signal.metric(), a));
}

FilteredSignal extract_filter(const Signal& signal, std::vector<std::size_t> kept) {
  const auto& c = signal.complex();
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty()) throw InvalidArgument("filter keeps no simplices");
  if (kept.back() >= c.simplices().size()) throw InvalidArgument("kept simplex index out of range");

  std::vector<Index> remap(c.num_vertices(), static_cast<Index>(-1));
  std::vector<Index> parents;
  for (std::size_t s : kept) {
    for (Index v : c.simplices()[s].verts) {
      if (remap[v] == static_cast<Index>(-1)) {
        remap[v] = 0;
      }
    }
  }
  for (Index v = 0; v < c.num_vertices(); ++v) {
    if (remap[v] != static_cast<Index>(-1)) {
      remap[v] = static_cast<Index>(parents.size());
      parents.push_back(v);
    }
  }
  auto map_face = [&](const Face& f) {
    Face out;
    for (Index v : f) out.push_back(remap[v]);
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<Point> verts;
  verts.reserve(parents.size());
  for (Index v : parents) verts.push_back(c.vertex(v));
  std::vector<OrientedSimplex> simplices;
  std::map<Face, int> incidence;
  std::map<Face, Face> to_parent;
  for (std::size_t s : kept) {
    OrientedSimplex os = c.simplices()[s];
    for (auto& v : os.verts) v = remap[v];
    for (const auto& f : sub_faces(c.simplices()[s].verts)) {
      const auto local = map_face(f);
      ++incidence[local];
      to_parent[local] = f;
    }
    simplices.push_back(std::move(os));
  }

  std::map<Face, Region> parent_tag;
  for (Region r : kAllRegions) {
    for (const auto& f : c.labeled(r)) parent_tag[f] = r;
  }
  LabelMap labels;
  for (const auto& [local, count] : incidence) {
    if (count != 1) continue;
    auto it = parent_tag.find(to_parent[local]);
    labels[it == parent_tag.end() ? Region::B : it->second].push_back(local);
  }

  if (labels[Region::A].size() != c.labeled(Region::A).size()) {
    throw StructureError("filter must keep every facet of A (A' ≠ A)");
  }

  auto complex = CobordismComplex::build(std::move(verts), std::move(simplices), std::move(labels));

  // Corner strata where A meets the ends must be unchanged.
  for (Region end : {Region::X, Region::Y}) {
    std::set<Face> before, after;
    for (const auto& r : c.corner_ridges(Region::A, end)) before.insert(r);
    for (const auto& r : complex.corner_ridges(Region::A, end)) {
      Face p;
      for (Index v : r) p.push_back(parents[v]);
      std::sort(p.begin(), p.end());
      after.insert(p);
    }
    if (before != after) {
      throw StructureError(std::string("filter changes the corner stratum A∩") + std::string(to_string(end)));
    }
  }

  const auto report = validate(complex);
  if (!report.ok) {
    std::ostringstream ss;
    ss << "filter is not a valid signal:";
    for (const auto& v : report.violations) ss << " [" << v.invariant << "]";
    throw StructureError(ss.str());
  }

  auto ptr = std::make_shared<const CobordismComplex>(std::move(complex));
  std::vector<double> lengths;
  lengths.reserve(ptr->edges().size());
  for (const auto& e : ptr->edges()) lengths.push_back(signal.metric().length(parents[e.u], parents[e.v]));
  MetricField metric(ptr->shared_edges(), std::move(lengths), signal.metric().source());
  return FilteredSignal{Signal(std::move(ptr), std::move(metric)), std::move(parents), std::move(kept)};
}

Signal compose(const Signal& lower, const Signal& upper, const Correspondence& corr) {
  const auto& m = lower.complex();
  const auto& mp = upper.complex();
  if (m.dim() != mp.dim() || m.ambient_dim() != mp.ambient_dim()) {
    throw InvalidArgument("composed signals must have equal dimensions");
  }

  const auto y_verts = region_vertices(m, Region::Y);
  const auto x_verts = region_vertices(mp, Region::X);
  std::map<Index, Index> up_to_low;
  std::set<Index> low_seen;
  for (const auto& [low, up] : corr.vertex_map) {
    if (!std::binary_search(y_verts.begin(), y_verts.end(), low)) {
      throw InvalidArgument("correspondence vertex " + std::to_string(low) + " is not on Y of the first signal");
    }
    if (!std::binary_search(x_verts.begin(), x_verts.end(), up)) {
      throw InvalidArgument("correspondence vertex " + std::to_string(up) + " is not on X of the second signal");
    }
    if (!up_to_low.emplace(up, low).second || !low_seen.insert(low).second) {
      throw InvalidArgument("correspondence is not a bijection");
    }
    const auto& p = m.vertex(low);
    const auto& q = mp.vertex(up);
    double sq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) sq += (p[i] - q[i]) * (p[i] - q[i]);
    if (std::sqrt(sq) > corr.tolerance) {
      throw InvalidArgument("corresponding vertices " + std::to_string(low) + " and " + std::to_string(up) +
                            " differ by more than the tolerance");
    }
  }
  if (up_to_low.size() != x_verts.size() || low_seen.size() != y_verts.size()) {
    throw InvalidArgument("correspondence does not cover Y and X'");
  }

  std::vector<Point> verts = m.vertices();
  std::vector<Index> remap(mp.num_vertices());
  for (Index v = 0; v < mp.num_vertices(); ++v) {
    auto it = up_to_low.find(v);
    if (it != up_to_low.end()) {
      remap[v] = it->second;
    } else {
      remap[v] = static_cast<Index>(verts.size());
      verts.push_back(mp.vertex(v));
    }
  }
  auto map_face = [&](const Face& f) {
    Face out;
    for (Index v : f) out.push_back(remap[v]);
    std::sort(out.begin(), out.end());
    return out;
  };

  std::set<Face> glued_low(m.labeled(Region::Y).begin(), m.labeled(Region::Y).end());
  std::set<Face> glued_up;
  for (const auto& f : mp.labeled(Region::X)) glued_up.insert(map_face(f));
  if (glued_low != glued_up) throw InvalidArgument("Y and X' facets do not match under the correspondence");

  std::vector<OrientedSimplex> simplices = m.simplices();
  for (const auto& s : mp.simplices()) {
    OrientedSimplex os = s;
    for (auto& v : os.verts) v = remap[v];
    simplices.push_back(std::move(os));
  }

  LabelMap labels;
  labels[Region::X] = m.labeled(Region::X);
  for (const auto& f : mp.labeled(Region::Y)) labels[Region::Y].push_back(map_face(f));
  for (Region r : {Region::A, Region::B}) {
    labels[r] = m.labeled(r);
    for (const auto& f : mp.labeled(r)) labels[r].push_back(map_face(f));
  }

  auto complex = CobordismComplex::build(std::move(verts), std::move(simplices), std::move(labels));
  const auto report = validate(complex);
  if (!report.ok) {
    std::ostringstream ss;
    ss << "composition is not a valid signal:";
    for (const auto& v : report.violations) ss << " [" << v.invariant << "]";
    throw StructureError(ss.str());
  }

  auto ptr = std::make_shared<const CobordismComplex>(std::move(complex));
  // Lengths come from whichever side owns the edge; glued edges must agree.
  std::map<Edge, double> upper_lengths;
  for (std::size_t e = 0; e < mp.edges().size(); ++e) {
    const Index a = remap[mp.edges()[e].u];
    const Index b = remap[mp.edges()[e].v];
    upper_lengths[{std::min(a, b), std::max(a, b)}] = upper.metric().lengths()[e];
  }
  std::vector<double> lengths;
  lengths.reserve(ptr->edges().size());
  for (const auto& e : ptr->edges()) {
    const auto low = (e.u < m.num_vertices() && e.v < m.num_vertices()) ? lower.metric().find(e.u, e.v)
                                                                         : std::nullopt;
    auto it = upper_lengths.find(e);
    if (low && it != upper_lengths.end() && std::abs(*low - it->second) > corr.tolerance) {
      throw MetricError("glued edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") has different lengths in the two signals");
    }
    lengths.push_back(low ? *low : it->second);
  }
  const auto source = (lower.metric().source() == MetricSource::induced &&
                       upper.metric().source() == MetricSource::induced)
                          ? MetricSource::induced
                          : MetricSource::deformed;
  MetricField metric(ptr->shared_edges(), std::move(lengths), source);
  return Signal(std::move(ptr), std::move(metric));
}

}  // namespace cobsig
