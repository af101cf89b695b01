#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cobsig/error.hpp"
#include "cobsig/generators.hpp"
#include "cobsig/geodesy.hpp"
#include "helpers.hpp"

using namespace cobsig;

TEST_CASE("distance to the left edge of the square grid is x") {
  const auto s = gen_square(16);
  for (int level = 0; level <= 3; ++level) {
    const auto f = distance_field(s, Region::A, level);
    for (Index v = 0; v < s.complex().num_vertices(); ++v) {
      CHECK(f[v] == doctest::Approx(s.complex().vertex(v)[0]).epsilon(1e-12));
    }
  }
  const auto f = distance_field(s, Region::A);
  for (Index v : region_vertices(s.complex(), Region::A)) CHECK(f[v] == 0.0);
}

TEST_CASE("distance to the inner shell wall approximates r - r0") {
  const auto s = gen_annular_shell(1.0, 1.2, 1.0, 32);
  const auto f = distance_field(s, Region::X);
  for (Index v = 0; v < s.complex().num_vertices(); ++v) {
    const auto& p = s.complex().vertex(v);
    const double want = std::hypot(p[0], p[1]) - 1.0;
    if (want < 1e-9) {
      CHECK(f[v] == 0.0);
    } else {
      CHECK(test::rel_err(f[v], want) < 0.03);
    }
  }
}

TEST_CASE("steiner graph structure") {
  const auto c = test::two_triangle_square();
  const auto s = make_signal(c);
  const auto g0 = SteinerGraph::for_signal(s, 0);
  CHECK(g0.num_nodes() == 4);
  CHECK(g0.num_arcs() == 2 * 5);
  const auto g1 = SteinerGraph::for_signal(s, 1);
  CHECK(g1.num_nodes() == 4 + 5);
  CHECK(g1.level() == 1);
  // Level 1 chords join midpoints of edges within a triangle.
  bool has_chord = false;
  for (const auto& arc : g1.arcs(4)) has_chord |= arc.target >= 4;
  CHECK(has_chord);
  CHECK_THROWS_AS(SteinerGraph::for_signal(s, 7), InvalidArgument);
  CHECK_THROWS_AS(SteinerGraph::for_signal(s, -1), InvalidArgument);
}

TEST_CASE("steiner chords shorten diagonal paths") {
  const auto s = gen_square(8);
  const Index a = nearest_vertex(s.complex(), {0.0, 0.0});
  const Index b = nearest_vertex(s.complex(), {1.0, 0.5});
  const double want = std::hypot(1.0, 0.5);
  double prev = kInfinity;
  for (int level = 0; level <= 3; ++level) {
    const double d = SteinerGraph::for_signal(s, level).distance(a, b);
    CHECK(d >= want - 1e-12);
    CHECK(d <= prev * (1.0 + 1e-13));
    prev = d;
  }
  CHECK(test::rel_err(prev, want) < 0.02);
}

TEST_CASE("point-to-point distance agrees with the full search") {
  const auto s = gen_square(10);
  const auto g = SteinerGraph::for_signal(s, 2);
  const Index src[] = {7};
  const auto f = vertex_distances(g, g.shortest_paths(src));
  for (Index v : {0u, 33u, 77u, 120u}) CHECK(g.distance(7, v) == f[v]);
  CHECK(g.distance(7, 7) == 0.0);
}

TEST_CASE("diameters") {
  const auto s = gen_square(16);
  CHECK(test::rel_err(diameter(s), std::sqrt(2.0)) < 0.02);
  CHECK(diameter(s, Region::A) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(diameter(s, Region::X) == doctest::Approx(1.0).epsilon(1e-12));

  const auto shell = gen_annular_shell(1.0, 1.2, 1.0, 32);
  CHECK(test::rel_err(diameter(shell, Region::X), std::sqrt(1.0 + std::numbers::pi * std::numbers::pi)) < 0.03);
}

TEST_CASE("pruned diameter equals the all-pairs reference") {
  std::mt19937 rng(12345);
  for (const auto& s : {gen_square(7), gen_rectangle(1.0, 2.0, 5), gen_annular_shell(1.0, 1.2, 1.0, 8)}) {
    const auto g = SteinerGraph::for_signal(s, 1);
    std::vector<Index> all(s.complex().num_vertices());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Index>(i);
    CHECK(diameter(g, all) == diameter_all_pairs(g, all));
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Index> subset;
      for (Index v : all) {
        if (rng() % 3 == 0) subset.push_back(v);
      }
      if (subset.empty()) subset.push_back(0);
      CHECK(diameter(g, subset) == diameter_all_pairs(g, subset));
    }
  }
}

TEST_CASE("injectivity radius") {
  const auto s = gen_square(64);
  const auto ia = injectivity_radius(s, Region::A);
  CHECK(ia.method == EstimateMethod::analytic);
  CHECK(ia.value == 1.0);

  const auto shell = gen_annular_shell(1.0, 1.2, 1.0, 16);
  const auto ix = injectivity_radius(shell, Region::X);
  CHECK(ix.method == EstimateMethod::analytic);
  CHECK(ix.value == doctest::Approx(0.2));

  const auto h = injectivity_radius(s, Region::A, 2, false);
  CHECK(h.method == EstimateMethod::heuristic);
  CHECK(h.value >= 0.8);
  CHECK(h.value <= 1.0 + 1e-12);
  const auto hx = injectivity_radius(s, Region::X, 2, false);
  CHECK(hx.value >= 0.8);
  CHECK(hx.value <= 1.0 + 1e-12);

  CHECK_THROWS_AS(injectivity_radius(s, Region::B), InvalidArgument);
}

TEST_CASE("distance field errors") {
  const auto c = CobordismComplex::build({{0, 0}, {1, 0}, {0, 1}}, {{{0, 1, 2}, 1}},
                                         {{Region::A, {{0, 1}, {1, 2}, {0, 2}}}});
  const auto s = Signal(std::make_shared<const CobordismComplex>(test::two_triangle_square()),
                        induced_metric(test::two_triangle_square()));
  CHECK_NOTHROW(distance_field(s, Region::A));
  const Index none[] = {0};
  CHECK_NOTHROW(distance_from_vertices(s, none));
  CHECK_THROWS_AS(distance_from_vertices(s, std::span<const Index>{}), InvalidArgument);
  CHECK_THROWS_AS(make_signal(c), StructureError);
}
