#include <doctest.h>

#include <algorithm>
#include <set>

#include "cobsig/error.hpp"
#include "cobsig/generators.hpp"
#include "helpers.hpp"

using namespace cobsig;

TEST_CASE("two-triangle unit square is a valid cobordism") {
  const auto c = test::two_triangle_square();
  CHECK(c.dim() == 2);
  CHECK(c.boundary_facets().size() == 4);
  CHECK(c.edges().size() == 5);
  const auto report = validate(c);
  CHECK(report.ok);
  CHECK(report.violations.empty());
}

TEST_CASE("single triangle with only A is rejected by validate") {
  const auto c = CobordismComplex::build({{0, 0}, {1, 0}, {0, 1}}, {{{0, 1, 2}, 1}},
                                         {{Region::A, {{0, 1}, {1, 2}, {0, 2}}}});
  const auto report = validate(c);
  CHECK_FALSE(report.ok);
  CHECK(report.has("empty region X"));
  CHECK(report.has("empty region Y"));
  CHECK(report.has("empty region B"));
}

TEST_CASE("structured 4x4 grid has 16 boundary facets, 4 per region") {
  const auto s = gen_square(4);
  const auto& c = s.complex();
  CHECK(c.simplices().size() == 32);
  CHECK(c.boundary_facets().size() == 16);
  for (Region r : kAllRegions) CHECK(c.labeled(r).size() == 4);

  // Brute-force facet enumeration.
  std::map<Face, int> count;
  for (const auto& t : c.simplices()) {
    for (const auto& f : sub_faces(t.verts)) ++count[f];
  }
  std::vector<Face> boundary;
  for (const auto& [f, n] : count) {
    if (n == 1) boundary.push_back(f);
  }
  CHECK(boundary == c.boundary_facets());
}

TEST_CASE("A and B sharing the left edge is reported") {
  const auto c = test::two_triangle_square(
      {{Region::X, {{0, 1}}}, {Region::Y, {{2, 3}}}, {Region::A, {{0, 3}}}, {Region::B, {{1, 2}, {0, 3}}}});
  const auto report = validate(c);
  CHECK_FALSE(report.ok);
  CHECK(report.has("A∩B nonempty"));
}

TEST_CASE("unlabeled boundary facet is reported") {
  const auto c = test::two_triangle_square({{Region::X, {{0, 1}}}, {Region::Y, {{2, 3}}}, {Region::A, {{0, 3}}}});
  const auto report = validate(c);
  CHECK(report.has("unlabeled boundary facet"));
  CHECK(report.has("empty region B"));
}

TEST_CASE("validate lists every violation, not only the first") {
  const auto c = test::two_triangle_square({{Region::A, {{0, 3}}}, {Region::B, {{0, 3}}}});
  const auto report = validate(c);
  CHECK(report.violations.size() >= 4);
  CHECK(report.has("A∩B nonempty"));
  CHECK(report.has("unlabeled boundary facet"));
  CHECK(report.has("empty region X"));
}

TEST_CASE("orientation mismatch is reported") {
  const auto c = CobordismComplex::build(
      {{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{{0, 1, 2}, 1}, {{0, 2, 3}, -1}},
      {{Region::X, {{0, 1}}}, {Region::Y, {{2, 3}}}, {Region::A, {{0, 3}}}, {Region::B, {{1, 2}}}});
  CHECK(validate(c).has("orientation mismatch"));
}

TEST_CASE("A and B meeting at a corner vertex is reported") {
  // A = left + bottom and B = right meet at the vertex (1, 0).
  const auto c = test::two_triangle_square(
      {{Region::X, {{2, 3}}}, {Region::Y, {{2, 3}}}, {Region::A, {{0, 3}, {0, 1}}}, {Region::B, {{1, 2}}}});
  const auto report = validate(c);
  CHECK(report.has("A∩B share a ridge"));
  CHECK(report.has("X∩Y nonempty"));
}

TEST_CASE("disconnected complex is reported") {
  const auto c = CobordismComplex::build(
      {{0, 0}, {1, 0}, {0, 1}, {5, 5}, {6, 5}, {5, 6}}, {{{0, 1, 2}, 1}, {{3, 4, 5}, 1}},
      {{Region::X, {{0, 1}}}, {Region::Y, {{3, 4}}}, {Region::A, {{0, 2}, {3, 5}}}, {Region::B, {{1, 2}, {4, 5}}}});
  CHECK(validate(c).has("disconnected complex"));
}

TEST_CASE("build errors") {
  using V = std::vector<Point>;
  CHECK_THROWS_AS(CobordismComplex::build(V{{0, 0}, {1, 0}, {0, 1}}, {{{0, 1, 5}, 1}}, {}), InvalidArgument);
  CHECK_THROWS_AS(CobordismComplex::build(V{{0, 0}, {1, 0}, {0, 1}}, {{{0, 1, 1}, 1}}, {}), InvalidArgument);
  CHECK_THROWS_AS(CobordismComplex::build(V{{0, 0}, {1, 0}, {0, 1}}, {{{0, 1, 2}, 2}}, {}), InvalidArgument);
  // Label on the interior diagonal of the two-triangle square.
  CHECK_THROWS_WITH_AS(test::two_triangle_square({{Region::A, {{0, 2}}}}), doctest::Contains("non-boundary"),
                       InvalidArgument);
  // Dimension 1 is outside the supported range.
  CHECK_THROWS_AS(CobordismComplex::build(V{{0}, {1}}, {{{0, 1}, 1}}, {}), InvalidArgument);
}

TEST_CASE("region tags and region_vertices") {
  CHECK(parse_region("A") == Region::A);
  CHECK_THROWS_AS(parse_region("Q"), InvalidArgument);
  const auto tag = RegionTag::parse("A^X");
  CHECK(tag.first == Region::A);
  CHECK(tag.second == Region::X);
  CHECK(RegionTag::parse("A∩X").second == Region::X);
  CHECK_THROWS_AS(RegionTag::parse("A^Z"), InvalidArgument);

  const int n = 8;
  const auto s = gen_square(n);
  const auto& c = s.complex();
  const auto left = region_vertices(c, Region::A);
  CHECK(left.size() == n + 1);
  for (Index v : left) CHECK(c.vertex(v)[0] == 0.0);
  const auto corner = region_vertices(c, RegionTag::parse("A^X"));
  REQUIRE(corner.size() == 1);
  CHECK(c.vertex(corner[0]) == Point{0.0, 0.0});

  const auto shell = gen_annular_shell(1.0, 1.2, 1.0, 16);
  const auto inner = region_vertices(shell.complex(), Region::X);
  std::size_t count_r1 = 0;
  for (Index v = 0; v < shell.complex().num_vertices(); ++v) {
    const auto& p = shell.complex().vertex(v);
    if (std::abs(std::hypot(p[0], p[1]) - 1.0) < 1e-12) ++count_r1;
  }
  CHECK(inner.size() == count_r1);
  for (Index v : inner) {
    const auto& p = shell.complex().vertex(v);
    CHECK(std::hypot(p[0], p[1]) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("boundary facets are the disjoint union of the labeled sets") {
  for (const auto& s : {gen_square(6), gen_annular_shell(1.0, 1.2, 1.0, 12)}) {
    const auto& c = s.complex();
    std::vector<Face> all;
    for (Region r : kAllRegions) all.insert(all.end(), c.labeled(r).begin(), c.labeled(r).end());
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    CHECK(all == c.boundary_facets());
  }
}

TEST_CASE("corner vertices lie on facets of both labels") {
  const auto s = gen_annular_shell(1.0, 1.2, 1.0, 12);
  const auto& c = s.complex();
  const auto a = region_vertices(c, Region::A);
  const auto x = region_vertices(c, Region::X);
  std::vector<Index> both;
  std::set_intersection(a.begin(), a.end(), x.begin(), x.end(), std::back_inserter(both));
  CHECK_FALSE(both.empty());
  const auto corner = region_vertices(c, RegionTag::parse("A^X"));
  CHECK(corner == both);
}
