#include <doctest.h>

#include <numbers>

#include "cobsig/energy.hpp"
#include "cobsig/error.hpp"
#include "cobsig/generators.hpp"
#include "helpers.hpp"

using namespace cobsig;

namespace {
constexpr double kShellE = 0.22 * std::numbers::pi;
const double kShellEF = 2.0 * std::numbers::pi * ((1.2 * 1.2 * 1.2 / 3.0 - 1.2 * 1.2 / 2.0) - (1.0 / 3.0 - 0.5));
}  // namespace

TEST_CASE("square energies") {
  const auto s = gen_square(64);
  CHECK(test::rel_err(energy(s), 0.5) < 0.02);
  CHECK(test::rel_err(fourier_energy(s), 0.5) < 0.02);
  CHECK(test::rel_err(energy_ratio(s), 1.0) < 0.04);
}

TEST_CASE("shell energies") {
  const auto s = gen_annular_shell(1.0, 1.2, 1.0, 32);
  CHECK(test::rel_err(energy(s), kShellE) < 0.03);
  CHECK(test::rel_err(fourier_energy(s), kShellEF) < 0.03);
  CHECK(test::rel_err(energy_ratio(s), kShellEF / kShellE) < 0.06);
}

TEST_CASE("fourier relabel permutes the labels") {
  const auto s = gen_square(4);
  const auto f = fourier_relabel(s);
  const auto& c = s.complex();
  const auto& fc = f.complex();
  CHECK(fc.labeled(Region::X) == c.labeled(Region::A));
  CHECK(fc.labeled(Region::Y) == c.labeled(Region::B));
  CHECK(fc.labeled(Region::A) == c.labeled(Region::X));
  CHECK(fc.labeled(Region::B) == c.labeled(Region::Y));
  CHECK(f.hint("E") == s.hint("EF"));
  CHECK(f.hint("i_A") == s.hint("i_X"));

  const auto shell = gen_annular_shell(1.0, 1.2, 1.0, 12);
  const auto fs = fourier_relabel(shell);
  CHECK(fs.complex().labeled(Region::X) == shell.complex().labeled(Region::A));
  CHECK(fs.complex().labeled(Region::A) == shell.complex().labeled(Region::X));
}

TEST_CASE("fourier relabel is an involution") {
  for (const auto& s : {gen_square(5), gen_annular_shell(1.0, 1.2, 1.0, 10)}) {
    const auto ff = fourier_relabel(fourier_relabel(s));
    CHECK(ff.complex().labels() == s.complex().labels());
    CHECK(ff.hints() == s.hints());
    for (std::size_t e = 0; e < s.complex().edges().size(); ++e) {
      CHECK(ff.metric().lengths()[e] == s.metric().lengths()[e]);
    }
  }
}

TEST_CASE("fourier energy is the energy of the relabeled signal") {
  const auto s = gen_annular_shell(1.0, 1.2, 1.0, 12);
  CHECK(fourier_energy(s) == energy(fourier_relabel(s)));
  const auto summary = summarize_energy(s, 1);
  CHECK(summary.steiner_level == 1);
  CHECK(summary.ratio == summary.fourier_energy / summary.energy);
}

TEST_CASE("relabel fails when the new A and B would touch") {
  // X and Y meet at (0.5, 0), which is allowed; after the swap they become A and B.
  const auto base = gen_square(2);
  LabelMap labels{{Region::X, {{0, 1}}},
                  {Region::Y, {{1, 2}, {6, 7}, {7, 8}}},
                  {Region::A, {{0, 3}, {3, 6}}},
                  {Region::B, {{2, 5}, {5, 8}}}};
  const auto s = make_signal(
      CobordismComplex::build(base.complex().vertices(), base.complex().simplices(), std::move(labels)));
  CHECK_THROWS_AS(fourier_relabel(s), StructureError);
}

TEST_CASE("barycentric quadrature agrees with lumped quadrature") {
  for (const auto& s : {gen_square(16), gen_annular_shell(1.0, 1.2, 1.0, 16)}) {
    CHECK(test::rel_err(barycentric_energy(s), energy(s)) < 1e-12);
  }
}

TEST_CASE("lumped integral checks sizes") {
  CHECK(lumped_integral(ScalarField(3, 2.0), ScalarField(3, 0.5)) == 3.0);
  CHECK_THROWS_AS(lumped_integral(ScalarField(3, 1.0), ScalarField(2, 1.0)), InvalidArgument);
}
