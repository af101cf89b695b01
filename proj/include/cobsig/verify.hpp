#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cobsig/generators.hpp"
#include "cobsig/geodesy.hpp"
#include "cobsig/signal.hpp"
#include "cobsig/signalops.hpp"

namespace cobsig {

enum class ValueSource { analytic, heuristic, computed };
std::string_view to_string(ValueSource s);

struct SourcedValue {
  double value = 0.0;
  ValueSource source = ValueSource::computed;
};

// Two-sided bound on E(F(M)) / E(M):
//   lower = 1 / (1 + 4 vol(M) (diam M + diam A + diam X) / (i_X^2 vol(X)))
//   upper =      1 + 4 vol(M) (diam M + diam A + diam X) / (i_A^2 vol(A))
struct BoundReport {
  double energy = 0.0;
  double fourier_energy = 0.0;
  double ratio = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  // vol_M, vol_A, vol_X, diam_M, diam_A, diam_X, i_A, i_X
  std::map<std::string, SourcedValue> inputs;
  bool holds_lower = false;
  bool holds_upper = false;
  int steiner_level = kDefaultSteinerLevel;

  bool holds() const { return holds_lower && holds_upper; }
};

struct BoundOptions {
  int steiner_level = kDefaultSteinerLevel;
  // Use i_A / i_X hints when present; otherwise the heuristic estimator.
  bool use_injectivity_hints = true;
};

BoundReport check_thm1_bounds(const Signal& signal, const BoundOptions& options = {});
double bound_constant(double vol_m, double diam_sum, double i, double vol_boundary);

// How β, γ and the inner-ball integrals weight each vertex.
//   conformal: a_ε^q times the lumped h-volume, the vertex-sampled form of
//              dV_{h a_ε} = a_ε^q dV_h; the measured ratio uses the same weights.
//   mesh:      lumped volume of the deformed mesh; the measured ratio is the
//              energy module's ratio on the deformed signal.
// Both split the measured energies exactly into outer + ε^q · inner.
enum class SweepWeighting { conformal, mesh };
std::string_view to_string(SweepWeighting w);
SweepWeighting parse_sweep_weighting(std::string_view name);

struct SweepRow {
  double epsilon = 0.0;
  double energy = 0.0;          // E(M_{h a_ε})
  double fourier_energy = 0.0;  // E(F(M_{h a_ε}))
  double measured_ratio = 0.0;
  // ratio from the energy module on the deformed mesh, for comparison
  double mesh_ratio = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double inner_x = 0.0;  // ∫_{ρ_g ≤ δ0} ρ(·, X) dV_h
  double inner_a = 0.0;
  double C = 0.0;
  double predicted = 0.0;
  double residual = 0.0;
  double predicted_fixed = 0.0;  // β, γ, C frozen at the smallest ε
  double residual_fixed = 0.0;
};

struct ExpansionReport {
  int k = 0;
  double order = 0.0;  // q = (k+2)/2
  NoiseSpec base;
  SweepWeighting weighting = SweepWeighting::conformal;
  int steiner_level = kDefaultSteinerLevel;
  std::size_t inner_vertices = 0;
  std::vector<SweepRow> rows;
  double slope = 0.0;        // least-squares slope of log residual vs log ε
  double slope_fixed = 0.0;
  double target = 0.0;       // k + 2
  double tolerance = 0.7;
  bool holds = false;        // slope >= target - tolerance
};

struct SweepOptions {
  int steiner_level = kDefaultSteinerLevel;
  SweepWeighting weighting = SweepWeighting::conformal;
  double slope_tolerance = 0.7;
};

// eps_list must be strictly descending in (0, 1). The epsilon field of
// `base` is ignored.
ExpansionReport eps_sweep(const Signal& signal, const NoiseSpec& base, const std::vector<double>& eps_list,
                          const SweepOptions& options = {});

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

inline constexpr double kQuadratureSlack = 0.02;

struct FilterReport {
  double filter_energy = 0.0;  // E(M'_g)
  double energy = 0.0;         // E(M_g)
  double noisy_energy = 0.0;   // E(M_h)
  double slack_clean = 0.0;    // E(M_g) - E(M'_g)
  double slack_noisy = 0.0;    // E(M_h) - E(M'_g)
  bool holds_clean = false;
  bool holds_noisy = false;
  int steiner_level = kDefaultSteinerLevel;

  bool holds() const { return holds_clean && holds_noisy; }
};

// Throws InvalidArgument if a kept vertex lies in the open δ-ball of `spec`.
FilterReport check_filter(const Signal& signal, const FilteredSignal& filter, const NoiseSpec& spec,
                          int steiner_level = kDefaultSteinerLevel);

struct CompositionReport {
  double composite_energy = 0.0;          // E(M'')
  double energy_sum = 0.0;                // E(M) + E(M')
  double lower_energy = 0.0;              // E(M)
  double upper_energy = 0.0;              // E(M')
  double composite_fourier_energy = 0.0;  // E(F(M''))
  double lower_fourier_energy = 0.0;      // E(F(M))
  bool holds_energy = false;   // E(M'') <= 1.02 (E(M) + E(M'))
  bool holds_fourier = false;  // E(F(M'')) >= 0.98 E(F(M))
  int steiner_level = kDefaultSteinerLevel;

  bool holds() const { return holds_energy && holds_fourier; }
};

CompositionReport check_composition(const Signal& lower, const Signal& upper, const Correspondence& corr,
                                    int steiner_level = kDefaultSteinerLevel);

struct OracleResult {
  double energy = 0.0;
  double fourier_energy = 0.0;
  double vol_m = 0.0;
  double vol_a = 0.0;
  double vol_x = 0.0;
  double diam_m = 0.0;
  double diam_a = 0.0;
  double diam_x = 0.0;
  int fine_resolution = 0;
};

// Midpoint-rule quadrature of the closed-form distance functions on a regular
// grid. Uses only the geometric parameters of `spec`, never the mesh.
OracleResult grid_oracle(const GeneratorSpec& spec, int fine_resolution);

// Default fine resolution per kind (1024 planar, 512 shell).
int default_oracle_resolution(GeneratorKind kind);

struct RefinementRow {
  int resolution = 0;
  int steiner_level = kDefaultSteinerLevel;
  double energy = 0.0;
  double fourier_energy = 0.0;
  double error_energy = 0.0;          // |E - oracle|
  double error_fourier_energy = 0.0;  // |EF - oracle|
  double change_energy = 0.0;         // relative change vs previous level (0 for the first)
  double change_fourier_energy = 0.0;
};

struct ConvergenceReport {
  GeneratorSpec spec;
  OracleResult oracle;
  std::vector<RefinementRow> rows;
  // log(err_prev / err_last) / log(res_last / res_prev) over the last two levels
  double order_energy = 0.0;
  double order_fourier_energy = 0.0;
};

ConvergenceReport refinement_study(const GeneratorSpec& spec, const std::vector<int>& levels,
                                   int steiner_level = kDefaultSteinerLevel, int oracle_resolution = 0);

}  // namespace cobsig
