#include "cobsig/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cobsig/energy.hpp"
#include "cobsig/error.hpp"
#include "cobsig/parallel.hpp"

namespace cobsig {

std::string_view to_string(ValueSource s) {
  switch (s) {
    case ValueSource::analytic: return "analytic";
    case ValueSource::heuristic: return "heuristic";
    case ValueSource::computed: return "computed";
  }
  return "?";
}

std::string_view to_string(SweepWeighting w) {
  return w == SweepWeighting::conformal ? "conformal" : "mesh";
}

SweepWeighting parse_sweep_weighting(std::string_view name) {
  if (name == "conformal") return SweepWeighting::conformal;
  if (name == "mesh") return SweepWeighting::mesh;
  throw InvalidArgument("unknown sweep weighting '" + std::string(name) + "'");
}

double bound_constant(double vol_m, double diam_sum, double i, double vol_boundary) {
  return 4.0 * vol_m * diam_sum / (i * i * vol_boundary);
}

BoundReport check_thm1_bounds(const Signal& signal, const BoundOptions& options) {
  const int s = options.steiner_level;
  BoundReport r;
  r.steiner_level = s;
  const auto summary = summarize_energy(signal, s);
  r.energy = summary.energy;
  r.fourier_energy = summary.fourier_energy;
  r.ratio = summary.ratio;

  auto computed = [](double v) { return SourcedValue{v, ValueSource::computed}; };
  r.inputs["vol_M"] = computed(total_volume(signal));
  r.inputs["vol_A"] = computed(region_volume(signal, Region::A));
  r.inputs["vol_X"] = computed(region_volume(signal, Region::X));
  r.inputs["diam_M"] = computed(diameter(signal, std::nullopt, s));
  r.inputs["diam_A"] = computed(diameter(signal, Region::A, s));
  r.inputs["diam_X"] = computed(diameter(signal, Region::X, s));
  for (Region reg : {Region::A, Region::X}) {
    const auto est = injectivity_radius(signal, reg, s, options.use_injectivity_hints);
    r.inputs[std::string("i_") + std::string(to_string(reg))] =
        SourcedValue{est.value, est.method == EstimateMethod::analytic ? ValueSource::analytic : ValueSource::heuristic};
  }

  const double vol_m = r.inputs["vol_M"].value;
  const double diam_sum = r.inputs["diam_M"].value + r.inputs["diam_A"].value + r.inputs["diam_X"].value;
  r.upper_bound = 1.0 + bound_constant(vol_m, diam_sum, r.inputs["i_A"].value, r.inputs["vol_A"].value);
  r.lower_bound = 1.0 / (1.0 + bound_constant(vol_m, diam_sum, r.inputs["i_X"].value, r.inputs["vol_X"].value));
  r.holds_lower = r.lower_bound <= r.ratio;
  r.holds_upper = r.ratio <= r.upper_bound;
  return r;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  if (lx.size() < 2) return std::nan("");
  const double n = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  if (sxx == 0.0) return std::nan("");
  return sxy / sxx;
}

ExpansionReport eps_sweep(const Signal& signal, const NoiseSpec& base, const std::vector<double>& eps_list,
                          const SweepOptions& options) {
  if (eps_list.size() < 2) throw InvalidArgument("eps sweep needs at least two epsilon values");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0.0) || !(eps_list[i] < 1.0)) throw InvalidArgument("epsilon values must lie in (0, 1)");
    if (i > 0 && !(eps_list[i] < eps_list[i - 1])) throw InvalidArgument("epsilon values must be strictly descending");
  }
  NoiseSpec probe = base;
  probe.epsilon = eps_list.front();
  check_noise_spec(signal, probe);

  const int s = options.steiner_level;
  ExpansionReport report;
  report.k = signal.k();
  report.order = (report.k + 2) / 2.0;
  report.base = base;
  report.weighting = options.weighting;
  report.steiner_level = s;
  report.target = report.k + 2;
  report.tolerance = options.slope_tolerance;

  const double q = report.order;
  const auto rho = center_distance(signal, base.center, s);
  const auto base_mass = lumped_vertex_volume(signal);
  std::vector<char> inner(rho.size(), 0);
  for (std::size_t v = 0; v < rho.size(); ++v) {
    inner[v] = !(rho[v] > base.delta0);
    report.inner_vertices += inner[v] ? 1 : 0;
  }

  report.rows.resize(eps_list.size());
  parallel_for(eps_list.size(), [&](std::size_t i) {
    NoiseSpec spec = base;
    spec.epsilon = eps_list[i];
    const auto a = bump_field(rho, spec);
    const Signal deformed = signal.with_metric(conformal_scale(signal.complex(), signal.metric(), a));
    const auto fa = distance_field(deformed, Region::A, s);
    const auto fx = distance_field(deformed, Region::X, s);
    const auto mesh_mass = lumped_vertex_volume(deformed);

    SweepRow& row = report.rows[i];
    row.epsilon = spec.epsilon;
    row.mesh_ratio = lumped_integral(fx, mesh_mass) / lumped_integral(fa, mesh_mass);

    double beta = 0.0, gamma = 0.0, in_x = 0.0, in_a = 0.0;
    for (std::size_t v = 0; v < rho.size(); ++v) {
      const double w = options.weighting == SweepWeighting::conformal ? std::pow(a[v], q) * base_mass[v]
                                                                      : mesh_mass[v];
      if (inner[v]) {
        in_x += fx[v] * w;
        in_a += fa[v] * w;
      } else {
        beta += fx[v] * w;
        gamma += fa[v] * w;
      }
    }
    const double eq = std::pow(spec.epsilon, q);
    row.energy = gamma + in_a;
    row.fourier_energy = beta + in_x;
    row.measured_ratio = row.fourier_energy / row.energy;
    row.beta = beta;
    row.gamma = gamma;
    row.inner_x = in_x / eq;
    row.inner_a = in_a / eq;
    row.C = row.inner_x / beta - row.inner_a / gamma;
    row.predicted = beta / gamma * (1.0 + row.C * eq);
    row.residual = std::abs(row.measured_ratio - row.predicted);
  });

  const SweepRow& last = report.rows.back();
  std::vector<double> eps, res, res_fixed;
  for (auto& row : report.rows) {
    row.predicted_fixed = last.beta / last.gamma * (1.0 + last.C * std::pow(row.epsilon, q));
    row.residual_fixed = std::abs(row.measured_ratio - row.predicted_fixed);
    eps.push_back(row.epsilon);
    res.push_back(row.residual);
    res_fixed.push_back(row.residual_fixed);
  }
  report.slope = loglog_slope(eps, res);
  report.slope_fixed = loglog_slope(eps, res_fixed);
  report.holds = report.slope >= report.target - report.tolerance;
  return report;
}

FilterReport check_filter(const Signal& signal, const FilteredSignal& filter, const NoiseSpec& spec,
                          int steiner_level) {
  check_noise_spec(signal, spec);
  const auto rho = center_distance(signal, spec.center, steiner_level);
  for (Index v : filter.parent_vertices) {
    if (rho[v] < spec.delta) {
      throw InvalidArgument("noise region meets the filter at vertex " + std::to_string(v));
    }
  }
  FilterReport r;
  r.steiner_level = steiner_level;
  r.filter_energy = energy(filter.signal, steiner_level);
  r.energy = energy(signal, steiner_level);
  r.noisy_energy = energy(apply_noise(signal, spec, steiner_level), steiner_level);
  r.slack_clean = r.energy - r.filter_energy;
  r.slack_noisy = r.noisy_energy - r.filter_energy;
  r.holds_clean = r.filter_energy <= (1.0 + kQuadratureSlack) * r.energy;
  r.holds_noisy = r.filter_energy <= (1.0 + kQuadratureSlack) * r.noisy_energy;
  return r;
}

CompositionReport check_composition(const Signal& lower, const Signal& upper, const Correspondence& corr,
                                    int steiner_level) {
  const Signal composite = compose(lower, upper, corr);
  CompositionReport r;
  r.steiner_level = steiner_level;
  r.composite_energy = energy(composite, steiner_level);
  r.lower_energy = energy(lower, steiner_level);
  r.upper_energy = energy(upper, steiner_level);
  r.energy_sum = r.lower_energy + r.upper_energy;
  r.composite_fourier_energy = fourier_energy(composite, steiner_level);
  r.lower_fourier_energy = fourier_energy(lower, steiner_level);
  r.holds_energy = r.composite_energy <= (1.0 + kQuadratureSlack) * r.energy_sum;
  r.holds_fourier = r.composite_fourier_energy >= (1.0 - kQuadratureSlack) * r.lower_fourier_energy;
  return r;
}

int default_oracle_resolution(GeneratorKind kind) {
  return kind == GeneratorKind::annular_shell ? 512 : 1024;
}

ConvergenceReport refinement_study(const GeneratorSpec& spec, const std::vector<int>& levels, int steiner_level,
                                   int oracle_resolution) {
  if (levels.size() < 2) throw InvalidArgument("refinement study needs at least two levels");
  ConvergenceReport report;
  report.spec = spec;
  report.oracle = grid_oracle(spec, oracle_resolution > 0 ? oracle_resolution : default_oracle_resolution(spec.kind));
  report.rows.resize(levels.size());
  parallel_for(levels.size(), [&](std::size_t i) {
    GeneratorSpec level_spec = spec;
    level_spec.resolution = levels[i];
    const Signal sig = generate(level_spec);
    auto& row = report.rows[i];
    row.resolution = levels[i];
    row.steiner_level = steiner_level;
    row.energy = energy(sig, steiner_level);
    row.fourier_energy = fourier_energy(sig, steiner_level);
    row.error_energy = std::abs(row.energy - report.oracle.energy);
    row.error_fourier_energy = std::abs(row.fourier_energy - report.oracle.fourier_energy);
  });
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    auto& row = report.rows[i];
    const auto& prev = report.rows[i - 1];
    row.change_energy = std::abs(row.energy - prev.energy) / std::abs(prev.energy);
    row.change_fourier_energy = std::abs(row.fourier_energy - prev.fourier_energy) / std::abs(prev.fourier_energy);
  }
  auto order = [&](double RefinementRow::*err) {
    const auto& a = report.rows[report.rows.size() - 2];
    const auto& b = report.rows.back();
    if (!(a.*err > 0.0) || !(b.*err > 0.0) || a.resolution == b.resolution) return std::nan("");
    return std::log(a.*err / b.*err) / std::log(static_cast<double>(b.resolution) / a.resolution);
  };
  report.order_energy = order(&RefinementRow::error_energy);
  report.order_fourier_energy = order(&RefinementRow::error_fourier_energy);
  return report;
}

}  // namespace cobsig
