#include "cobsig/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cobsig/error.hpp"

namespace cobsig {

namespace {

std::string face_string(std::span<const Index> f) {
  std::ostringstream ss;
  ss << "(";
  for (std::size_t i = 0; i < f.size(); ++i) ss << (i ? "," : "") << f[i];
  ss << ")";
  return ss.str();
}

// +1 for an even permutation of the sequence into ascending order.
int sort_parity(std::vector<Index> v) {
  int parity = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) parity = -parity;
    }
  }
  return parity;
}

std::set<Face> ridges_of(const std::vector<Face>& facets) {
  std::set<Face> out;
  for (const auto& f : facets) {
    for (auto& r : sub_faces(f)) out.insert(std::move(r));
  }
  return out;
}

}  // namespace

std::string_view to_string(Region r) {
  switch (r) {
    case Region::X: return "X";
    case Region::Y: return "Y";
    case Region::A: return "A";
    case Region::B: return "B";
  }
  return "?";
}

Region parse_region(std::string_view name) {
  if (name == "X") return Region::X;
  if (name == "Y") return Region::Y;
  if (name == "A") return Region::A;
  if (name == "B") return Region::B;
  throw InvalidArgument("unknown region tag '" + std::string(name) + "'");
}

RegionTag RegionTag::parse(std::string_view text) {
  // Accepted corner spellings: "A^X", "A&X", "A∩X".
  for (std::string_view sep : {"^", "&", "∩"}) {
    auto pos = text.find(sep);
    if (pos != std::string_view::npos) {
      return RegionTag{parse_region(text.substr(0, pos)), parse_region(text.substr(pos + sep.size()))};
    }
  }
  return RegionTag{parse_region(text), std::nullopt};
}

std::string RegionTag::name() const {
  std::string s(to_string(first));
  if (second) {
    s += "∩";
    s += to_string(*second);
  }
  return s;
}

Face make_face(std::span<const Index> verts) {
  Face f(verts.begin(), verts.end());
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<Face> sub_faces(std::span<const Index> simplex) {
  std::vector<Face> out;
  out.reserve(simplex.size());
  for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
    Face f;
    f.reserve(simplex.size() - 1);
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i != skip) f.push_back(simplex[i]);
    }
    std::sort(f.begin(), f.end());
    out.push_back(std::move(f));
  }
  return out;
}

CobordismComplex CobordismComplex::build(std::vector<Point> vertices, std::vector<OrientedSimplex> simplices,
                                         LabelMap labels) {
  if (simplices.empty()) throw InvalidArgument("complex has no top simplices");
  if (vertices.empty()) throw InvalidArgument("complex has no vertices");

  CobordismComplex c;
  c.dim_ = static_cast<int>(simplices.front().verts.size()) - 1;
  if (c.dim_ != 2 && c.dim_ != 3) {
    throw InvalidArgument("only 2- and 3-dimensional complexes are supported, got dimension " +
                          std::to_string(c.dim_));
  }
  c.ambient_dim_ = static_cast<int>(vertices.front().size());
  if (c.ambient_dim_ < c.dim_) throw InvalidArgument("ambient dimension smaller than complex dimension");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (static_cast<int>(vertices[i].size()) != c.ambient_dim_) {
      throw InvalidArgument("vertex " + std::to_string(i) + " has inconsistent coordinate count");
    }
  }

  const auto nv = vertices.size();
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    const auto& simp = simplices[s];
    if (static_cast<int>(simp.verts.size()) != c.dim_ + 1) {
      throw InvalidArgument("simplex " + std::to_string(s) + " has wrong vertex count");
    }
    if (simp.sign != 1 && simp.sign != -1) {
      throw InvalidArgument("simplex " + std::to_string(s) + " has orientation sign other than +1/-1");
    }
    for (Index v : simp.verts) {
      if (v >= nv) {
        throw InvalidArgument("simplex " + std::to_string(s) + " references out-of-range vertex " +
                              std::to_string(v));
      }
    }
    Face sorted = make_face(simp.verts);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidArgument("simplex " + std::to_string(s) + " has a duplicate vertex " + face_string(simp.verts));
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (std::size_t j = i + 1; j < sorted.size(); ++j) edges.push_back({sorted[i], sorted[j]});
    }
    // Facet opposite position i inherits sign * (-1)^i on the ordered remainder.
    for (std::size_t skip = 0; skip < simp.verts.size(); ++skip) {
      std::vector<Index> rest;
      for (std::size_t i = 0; i < simp.verts.size(); ++i) {
        if (i != skip) rest.push_back(simp.verts[i]);
      }
      const int induced = simp.sign * ((skip % 2 == 0) ? 1 : -1) * sort_parity(rest);
      auto& info = c.facets_[make_face(rest)];
      info.count += 1;
      info.induced.push_back(induced);
      info.owners.push_back(s);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  c.edges_ = std::make_shared<const std::vector<Edge>>(std::move(edges));

  for (const auto& [face, info] : c.facets_) {
    if (info.count == 1) c.boundary_facets_.push_back(face);
  }

  for (auto& [region, facets] : labels) {
    for (auto& f : facets) {
      if (static_cast<int>(f.size()) != c.dim_) {
        throw InvalidArgument(std::string("label ") + std::string(to_string(region)) + " facet " + face_string(f) +
                              " has wrong vertex count");
      }
      for (Index v : f) {
        if (v >= nv) throw InvalidArgument("label references out-of-range vertex " + std::to_string(v));
      }
      std::sort(f.begin(), f.end());
      if (c.facet_incidence(f) != 1) {
        throw InvalidArgument(std::string("label ") + std::string(to_string(region)) +
                              " references a non-boundary facet " + face_string(f));
      }
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  }
  for (Region r : kAllRegions) labels.try_emplace(r);
  c.labels_ = std::move(labels);
  c.vertices_ = std::move(vertices);
  c.simplices_ = std::move(simplices);
  return c;
}

const std::vector<Face>& CobordismComplex::labeled(Region r) const { return labels_.at(r); }

std::optional<std::size_t> CobordismComplex::edge_index(Index a, Index b) const {
  if (a > b) std::swap(a, b);
  const Edge key{a, b};
  auto it = std::lower_bound(edges_->begin(), edges_->end(), key);
  if (it == edges_->end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_->begin());
}

int CobordismComplex::facet_incidence(const Face& f) const {
  auto it = facets_.find(f);
  return it == facets_.end() ? 0 : it->second.count;
}

std::vector<Face> CobordismComplex::corner_ridges(Region a, Region b) const {
  const auto ra = ridges_of(labeled(a));
  const auto rb = ridges_of(labeled(b));
  std::vector<Face> out;
  std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(out));
  return out;
}

bool ValidationReport::has(std::string_view invariant) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.invariant == invariant; });
}

struct ValidationAccess {
  static const std::map<Face, CobordismComplex::FacetInfo>& facets(const CobordismComplex& c) { return c.facets_; }
};

ValidationReport validate(const CobordismComplex& complex) {
  ValidationReport report;
  auto flag = [&](std::string name, Face f) { report.violations.push_back({std::move(name), std::move(f)}); };

  const auto& facets = ValidationAccess::facets(complex);
  for (const auto& [face, info] : facets) {
    if (info.count > 2) {
      flag("non-manifold facet", face);
    } else if (info.count == 2 && info.induced[0] == info.induced[1]) {
      flag("orientation mismatch", face);
    }
  }

  std::map<Face, std::vector<Region>> tags;
  for (Region r : kAllRegions) {
    for (const auto& f : complex.labeled(r)) tags[f].push_back(r);
  }
  for (const auto& [face, regions] : tags) {
    if (!complex.is_boundary_facet(face)) flag("labeled interior facet", face);
    if (regions.size() < 2) continue;
    auto has = [&](Region r) { return std::find(regions.begin(), regions.end(), r) != regions.end(); };
    if (has(Region::X) && has(Region::Y)) flag("X∩Y nonempty", face);
    if (has(Region::A) && has(Region::B)) flag("A∩B nonempty", face);
    if (!(regions.size() == 2 && ((has(Region::X) && has(Region::Y)) || (has(Region::A) && has(Region::B))))) {
      flag("multiply labeled facet", face);
    }
  }
  for (const auto& f : complex.boundary_facets()) {
    if (!tags.contains(f)) flag("unlabeled boundary facet", f);
  }
  for (Region r : kAllRegions) {
    if (complex.labeled(r).empty()) flag(std::string("empty region ") + std::string(to_string(r)), {});
  }
  for (auto& ridge : complex.corner_ridges(Region::A, Region::B)) flag("A∩B share a ridge", std::move(ridge));
  if (complex.corner_ridges(Region::A, Region::X).empty()) flag("A∩X corner empty", {});

  // Connectivity of top simplices through shared facets.
  const auto ns = complex.simplices().size();
  std::vector<std::size_t> parent(ns);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [face, info] : facets) {
    for (std::size_t i = 1; i < info.owners.size(); ++i) {
      parent[find(info.owners[i])] = find(info.owners[0]);
    }
  }
  for (std::size_t s = 1; s < ns; ++s) {
    if (find(s) != find(0)) {
      flag("disconnected complex", make_face(complex.simplices()[s].verts));
      break;
    }
  }

  report.ok = report.violations.empty();
  return report;
}

std::vector<Index> region_vertices(const CobordismComplex& complex, RegionTag tag) {
  std::vector<Index> out;
  if (tag.second) {
    for (const auto& r : complex.corner_ridges(tag.first, *tag.second)) out.insert(out.end(), r.begin(), r.end());
  } else {
    for (const auto& f : complex.labeled(tag.first)) out.insert(out.end(), f.begin(), f.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace cobsig
