#include <doctest.h>

#include <numbers>

#include "cobsig/error.hpp"
#include "cobsig/generators.hpp"
#include "cobsig/verify.hpp"
#include "helpers.hpp"

using namespace cobsig;

TEST_CASE("square counts") {
  const auto s = gen_square(2);
  CHECK(s.complex().simplices().size() == 8);
  CHECK(s.complex().num_vertices() == 9);
  for (Region r : kAllRegions) CHECK(s.complex().labeled(r).size() == 2);
  CHECK(validate(gen_square(16).complex()).ok);
  CHECK(s.hint("E") == 0.5);
  CHECK(s.hint("EF") == 0.5);
  CHECK(s.hint("diam_M") == std::sqrt(2.0));
  CHECK_THROWS_AS(gen_square(1), InvalidArgument);
}

TEST_CASE("rectangle hints and labeling") {
  const auto r = gen_rectangle(1.0, 2.0, 16);
  CHECK(r.hint("E") == 1.0);
  CHECK(r.hint("EF") == 2.0);
  CHECK(validate(r.complex()).ok);
  CHECK(r.complex().simplices().size() == 2 * 16 * 32);

  const auto a = gen_rectangle(1.0, 1.0, 6);
  const auto b = gen_square(6);
  CHECK(a.complex().labels() == b.complex().labels());
  CHECK(a.complex().vertices() == b.complex().vertices());

  CHECK_THROWS_AS(gen_rectangle(0.0, 1.0, 4), InvalidArgument);
  CHECK_THROWS_AS(gen_rectangle(1.0, -1.0, 4), InvalidArgument);
}

TEST_CASE("annular shell") {
  const auto s = gen_annular_shell(1.0, 1.2, 1.0, 32);
  const auto report = validate(s.complex());
  CHECK(report.ok);
  for (Region r : kAllRegions) CHECK_FALSE(s.complex().labeled(r).empty());
  CHECK(*s.hint("vol_M") == doctest::Approx(0.44 * std::numbers::pi).epsilon(1e-14));
  CHECK(*s.hint("E") == doctest::Approx(0.22 * std::numbers::pi).epsilon(1e-14));
  CHECK(*s.hint("EF") == doctest::Approx(0.142419).epsilon(1e-5));
  CHECK(*s.hint("i_X") == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(s.hint("i_A") == 1.0);
  for (const auto& t : s.complex().simplices()) CHECK((t.sign == 1 || t.sign == -1));

  CHECK_THROWS_AS(gen_annular_shell(1.2, 1.0, 1.0, 16), InvalidArgument);
  CHECK_THROWS_AS(gen_annular_shell(1.0, 1.2, 1.0, 7), InvalidArgument);
  CHECK_THROWS_AS(gen_annular_shell(1.0, 1.2, 0.0, 16), InvalidArgument);
  CHECK_THROWS_AS(gen_annular_shell(0.0, 1.2, 1.0, 16), InvalidArgument);
}

TEST_CASE("refinement keeps the label structure") {
  for (int n : {2, 3, 8, 17}) {
    const auto s = gen_square(n);
    CHECK(validate(s.complex()).ok);
    CHECK_FALSE(s.complex().corner_ridges(Region::A, Region::X).empty());
    CHECK_FALSE(s.complex().corner_ridges(Region::A, Region::Y).empty());
  }
  for (int n : {8, 12, 16}) {
    const auto s = gen_annular_shell(1.0, 1.2, 1.0, n);
    CHECK(validate(s.complex()).ok);
    CHECK_FALSE(s.complex().corner_ridges(Region::A, Region::X).empty());
    CHECK_FALSE(s.complex().corner_ridges(Region::B, Region::Y).empty());
  }
}

TEST_CASE("generate dispatches on the generator kind") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::rectangle;
  spec.width = 2.0;
  spec.height = 1.0;
  spec.resolution = 4;
  const auto s = generate(spec);
  CHECK(s.complex().num_vertices() == 5 * 3);
  CHECK(parse_generator_kind("annular_shell") == GeneratorKind::annular_shell);
  CHECK_THROWS_AS(parse_generator_kind("torus"), InvalidArgument);
  spec.resolution = 1;
  CHECK_THROWS_AS(generate(spec), InvalidArgument);
}

TEST_CASE("analytic hints match the grid oracle") {
  for (GeneratorKind kind : {GeneratorKind::square, GeneratorKind::rectangle, GeneratorKind::annular_shell}) {
    GeneratorSpec spec;
    spec.kind = kind;
    spec.resolution = 16;
    spec.height = kind == GeneratorKind::rectangle ? 2.0 : 1.0;
    const auto hints = analytic_hints(spec);
    const auto o = grid_oracle(spec, 400);
    CHECK(test::rel_err(o.energy, hints.at("E")) < 1e-4);
    CHECK(test::rel_err(o.fourier_energy, hints.at("EF")) < 1e-4);
    CHECK(test::rel_err(o.vol_m, hints.at("vol_M")) < 1e-4);
    CHECK(test::rel_err(o.vol_a, hints.at("vol_A")) < 1e-4);
    CHECK(test::rel_err(o.vol_x, hints.at("vol_X")) < 1e-4);
    CHECK(test::rel_err(o.diam_m, hints.at("diam_M")) < 1e-12);
  }
}

TEST_CASE("stack correspondence matches coordinates") {
  const auto m = gen_rectangle(1.0, 1.0, 5);
  const auto mp = gen_rectangle(1.0, 1.0, 5, {0.0, 1.0});
  const auto corr = stack_correspondence(m, mp);
  CHECK(corr.vertex_map.size() == 6);
  for (const auto& [y, x] : corr.vertex_map) CHECK(m.complex().vertex(y) == mp.complex().vertex(x));
}
