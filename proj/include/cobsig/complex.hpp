#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cobsig {

using Index = std::uint32_t;

// Boundary strata of a relative cobordism. The side boundary is A ⊔ B and
// the two ends are X and Y.
enum class Region : std::uint8_t { X, Y, A, B };

inline constexpr std::array<Region, 4> kAllRegions{Region::X, Region::Y, Region::A, Region::B};

std::string_view to_string(Region r);
Region parse_region(std::string_view name);

// Unoriented face: vertex indices in ascending order.
using Face = std::vector<Index>;
Face make_face(std::span<const Index> verts);

using Point = std::vector<double>;

struct OrientedSimplex {
  std::vector<Index> verts;
  int sign = 1;
};

using LabelMap = std::map<Region, std::vector<Face>>;

struct Edge {
  Index u;
  Index v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A region tag for vertex queries: a single stratum, or the corner stratum
// where two strata meet (e.g. A∩X).
struct RegionTag {
  Region first;
  std::optional<Region> second;

  static RegionTag parse(std::string_view text);
  std::string name() const;
};

// Simplicial d-complex (d = k+2) embedded in R^n with boundary facets tagged
// X, Y, A or B. Immutable after build; the cobordism invariants are checked
// by validate(), not by build().
class CobordismComplex {
 public:
  static CobordismComplex build(std::vector<Point> vertices, std::vector<OrientedSimplex> simplices,
                                LabelMap labels);

  int dim() const { return dim_; }
  int ambient_dim() const { return ambient_dim_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(Index i) const { return vertices_[i]; }
  const std::vector<OrientedSimplex>& simplices() const { return simplices_; }

  // Facets carrying the given tag, each sorted, in ascending order.
  const std::vector<Face>& labeled(Region r) const;
  const LabelMap& labels() const { return labels_; }

  // Facets incident to exactly one top simplex, ascending.
  const std::vector<Face>& boundary_facets() const { return boundary_facets_; }

  // Unique edges of all top simplices, ascending by (u, v) with u < v.
  const std::vector<Edge>& edges() const { return *edges_; }
  std::shared_ptr<const std::vector<Edge>> shared_edges() const { return edges_; }
  std::optional<std::size_t> edge_index(Index a, Index b) const;

  // Number of top simplices incident to the facet (0 if not a facet).
  int facet_incidence(const Face& f) const;
  bool is_boundary_facet(const Face& f) const { return facet_incidence(f) == 1; }

  // (d-2)-faces shared by an `a`-facet and a `b`-facet.
  std::vector<Face> corner_ridges(Region a, Region b) const;

 private:
  struct FacetInfo {
    int count = 0;
    // Orientation induced on the sorted facet by each incident simplex.
    std::vector<int> induced;
    std::vector<std::size_t> owners;
  };

  friend struct ValidationAccess;

  int dim_ = 0;
  int ambient_dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<OrientedSimplex> simplices_;
  LabelMap labels_;
  std::vector<Face> boundary_facets_;
  std::map<Face, FacetInfo> facets_;
  std::shared_ptr<const std::vector<Edge>> edges_;
};

struct Violation {
  std::string invariant;
  Face simplex;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  bool has(std::string_view invariant) const;
};

ValidationReport validate(const CobordismComplex& complex);

// Closed-region vertex set: union of the vertices of all facets with the tag.
// For a corner tag, the vertices of the shared ridges.
std::vector<Index> region_vertices(const CobordismComplex& complex, RegionTag tag);
inline std::vector<Index> region_vertices(const CobordismComplex& complex, Region r) {
  return region_vertices(complex, RegionTag{r, std::nullopt});
}

// All (d-1)-faces of the simplex, i.e. the simplex with one vertex removed,
// sorted. Works for any simplex size >= 2.
std::vector<Face> sub_faces(std::span<const Index> simplex);

}  // namespace cobsig
