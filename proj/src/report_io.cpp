#include "cobsig/report_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cobsig/error.hpp"

namespace cobsig {

using nlohmann::ordered_json;

namespace {

using Row = std::vector<std::pair<std::string, std::string>>;

std::string csv(const std::vector<Row>& rows) {
  std::ostringstream out;
  if (rows.empty()) return {};
  for (std::size_t i = 0; i < rows.front().size(); ++i) out << (i ? "," : "") << rows.front()[i].first;
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].second;
    out << "\n";
  }
  return out.str();
}

std::string num(double v) { return format_double(v); }
std::string flag(bool b) { return b ? "true" : "false"; }

// JSON has no NaN; unavailable fits are written as null.
ordered_json jnum(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json noise_json(const NoiseSpec& s) {
  return {{"center", s.center}, {"delta0", s.delta0}, {"delta", s.delta}, {"epsilon", s.epsilon}};
}

ordered_json spec_json(const GeneratorSpec& s) {
  ordered_json j{{"kind", std::string(to_string(s.kind))}, {"resolution", s.resolution}};
  if (s.kind == GeneratorKind::rectangle) {
    j["width"] = s.width;
    j["height"] = s.height;
  } else if (s.kind == GeneratorKind::annular_shell) {
    j["r0"] = s.r0;
    j["r1"] = s.r1;
    j["height"] = s.height;
  }
  return j;
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw InvalidArgument("unknown report format '" + std::string(name) + "'");
}

std::string format_report(const ValidationReport& r, ReportFormat f) {
  if (f == ReportFormat::csv) {
    std::vector<Row> rows;
    for (const auto& v : r.violations) {
      std::string face;
      for (std::size_t i = 0; i < v.simplex.size(); ++i) face += (i ? " " : "") + std::to_string(v.simplex[i]);
      rows.push_back({{"invariant", v.invariant}, {"simplex", face}});
    }
    if (rows.empty()) return "invariant,simplex\n";
    return csv(rows);
  }
  ordered_json j{{"ok", r.ok}};
  ordered_json arr = ordered_json::array();
  for (const auto& v : r.violations) arr.push_back({{"invariant", v.invariant}, {"simplex", v.simplex}});
  j["violations"] = std::move(arr);
  return dump(j);
}

std::string format_report(const EnergySummary& r, std::optional<int> resolution, ReportFormat f) {
  if (f == ReportFormat::csv) {
    return csv({{{"E", num(r.energy)},
                 {"EF", num(r.fourier_energy)},
                 {"ratio", num(r.ratio)},
                 {"steiner_level", std::to_string(r.steiner_level)},
                 {"resolution", resolution ? std::to_string(*resolution) : ""}}});
  }
  ordered_json j{{"E", r.energy}, {"EF", r.fourier_energy}, {"ratio", r.ratio}, {"steiner_level", r.steiner_level}};
  j["resolution"] = resolution ? ordered_json(*resolution) : ordered_json(nullptr);
  return dump(j);
}

std::string format_report(const BoundReport& r, ReportFormat f) {
  if (f == ReportFormat::csv) {
    Row row{{"E", num(r.energy)},
            {"EF", num(r.fourier_energy)},
            {"ratio", num(r.ratio)},
            {"lower_bound", num(r.lower_bound)},
            {"upper_bound", num(r.upper_bound)}};
    for (const auto& [name, v] : r.inputs) {
      row.emplace_back(name, num(v.value));
      row.emplace_back(name + "_source", std::string(to_string(v.source)));
    }
    row.emplace_back("holds_lower", flag(r.holds_lower));
    row.emplace_back("holds_upper", flag(r.holds_upper));
    row.emplace_back("steiner_level", std::to_string(r.steiner_level));
    return csv({row});
  }
  ordered_json inputs = ordered_json::object();
  for (const auto& [name, v] : r.inputs) {
    inputs[name] = {{"value", v.value}, {"source", std::string(to_string(v.source))}};
  }
  ordered_json j{{"E", r.energy},
                 {"EF", r.fourier_energy},
                 {"ratio", r.ratio},
                 {"lower_bound", r.lower_bound},
                 {"upper_bound", r.upper_bound},
                 {"inputs", inputs},
                 {"holds", {{"lower", r.holds_lower}, {"upper", r.holds_upper}}},
                 {"steiner_level", r.steiner_level}};
  return dump(j);
}

std::string format_report(const ExpansionReport& r, ReportFormat f) {
  if (f == ReportFormat::csv) {
    std::vector<Row> rows;
    for (const auto& x : r.rows) {
      rows.push_back({{"epsilon", num(x.epsilon)},
                      {"E", num(x.energy)},
                      {"EF", num(x.fourier_energy)},
                      {"measured_ratio", num(x.measured_ratio)},
                      {"mesh_ratio", num(x.mesh_ratio)},
                      {"beta", num(x.beta)},
                      {"gamma", num(x.gamma)},
                      {"inner_X", num(x.inner_x)},
                      {"inner_A", num(x.inner_a)},
                      {"C", num(x.C)},
                      {"predicted", num(x.predicted)},
                      {"residual", num(x.residual)},
                      {"predicted_fixed", num(x.predicted_fixed)},
                      {"residual_fixed", num(x.residual_fixed)},
                      {"slope", num(r.slope)},
                      {"slope_fixed", num(r.slope_fixed)},
                      {"holds", flag(r.holds)}});
    }
    return csv(rows);
  }
  ordered_json rows = ordered_json::array();
  for (const auto& x : r.rows) {
    rows.push_back({{"epsilon", x.epsilon},
                    {"E", x.energy},
                    {"EF", x.fourier_energy},
                    {"measured_ratio", x.measured_ratio},
                    {"mesh_ratio", x.mesh_ratio},
                    {"beta", x.beta},
                    {"gamma", x.gamma},
                    {"inner_X", x.inner_x},
                    {"inner_A", x.inner_a},
                    {"C", x.C},
                    {"predicted", x.predicted},
                    {"residual", x.residual},
                    {"predicted_fixed", x.predicted_fixed},
                    {"residual_fixed", x.residual_fixed}});
  }
  ordered_json j{{"k", r.k},
                 {"order", r.order},
                 {"noise", noise_json(r.base)},
                 {"weighting", std::string(to_string(r.weighting))},
                 {"steiner_level", r.steiner_level},
                 {"inner_vertices", r.inner_vertices},
                 {"rows", rows},
                 {"slope", jnum(r.slope)},
                 {"slope_fixed", jnum(r.slope_fixed)},
                 {"target", r.target},
                 {"tolerance", r.tolerance},
                 {"holds", r.holds}};
  return dump(j);
}

std::string format_report(const FilterReport& r, ReportFormat f) {
  if (f == ReportFormat::csv) {
    return csv({{{"E_filter", num(r.filter_energy)},
                 {"E", num(r.energy)},
                 {"E_noisy", num(r.noisy_energy)},
                 {"slack_clean", num(r.slack_clean)},
                 {"slack_noisy", num(r.slack_noisy)},
                 {"holds_clean", flag(r.holds_clean)},
                 {"holds_noisy", flag(r.holds_noisy)}}});
  }
  ordered_json j{{"E_filter", r.filter_energy},
                 {"E", r.energy},
                 {"E_noisy", r.noisy_energy},
                 {"slack", {{"clean", r.slack_clean}, {"noisy", r.slack_noisy}}},
                 {"holds", {{"clean", r.holds_clean}, {"noisy", r.holds_noisy}}},
                 {"steiner_level", r.steiner_level}};
  return dump(j);
}

std::string format_report(const CompositionReport& r, ReportFormat f) {
  if (f == ReportFormat::csv) {
    return csv({{{"E_composite", num(r.composite_energy)},
                 {"E_sum", num(r.energy_sum)},
                 {"E_lower", num(r.lower_energy)},
                 {"E_upper", num(r.upper_energy)},
                 {"EF_composite", num(r.composite_fourier_energy)},
                 {"EF_lower", num(r.lower_fourier_energy)},
                 {"holds_energy", flag(r.holds_energy)},
                 {"holds_fourier", flag(r.holds_fourier)}}});
  }
  ordered_json j{{"E_composite", r.composite_energy},
                 {"E_sum", r.energy_sum},
                 {"E_lower", r.lower_energy},
                 {"E_upper", r.upper_energy},
                 {"EF_composite", r.composite_fourier_energy},
                 {"EF_lower", r.lower_fourier_energy},
                 {"holds", {{"energy", r.holds_energy}, {"fourier", r.holds_fourier}}},
                 {"steiner_level", r.steiner_level}};
  return dump(j);
}

std::string format_report(const OracleResult& r, const GeneratorSpec& spec, ReportFormat f) {
  if (f == ReportFormat::csv) {
    return csv({{{"kind", std::string(to_string(spec.kind))},
                 {"fine_resolution", std::to_string(r.fine_resolution)},
                 {"E", num(r.energy)},
                 {"EF", num(r.fourier_energy)},
                 {"vol_M", num(r.vol_m)},
                 {"vol_A", num(r.vol_a)},
                 {"vol_X", num(r.vol_x)},
                 {"diam_M", num(r.diam_m)},
                 {"diam_A", num(r.diam_a)},
                 {"diam_X", num(r.diam_x)}}});
  }
  ordered_json j{{"generator", spec_json(spec)},
                 {"fine_resolution", r.fine_resolution},
                 {"E", r.energy},
                 {"EF", r.fourier_energy},
                 {"vol_M", r.vol_m},
                 {"vol_A", r.vol_a},
                 {"vol_X", r.vol_x},
                 {"diam_M", r.diam_m},
                 {"diam_A", r.diam_a},
                 {"diam_X", r.diam_x}};
  return dump(j);
}

std::string format_report(const ConvergenceReport& r, ReportFormat f) {
  if (f == ReportFormat::csv) {
    std::vector<Row> rows;
    for (const auto& x : r.rows) {
      rows.push_back({{"resolution", std::to_string(x.resolution)},
                      {"steiner_level", std::to_string(x.steiner_level)},
                      {"E", num(x.energy)},
                      {"EF", num(x.fourier_energy)},
                      {"error_E", num(x.error_energy)},
                      {"error_EF", num(x.error_fourier_energy)},
                      {"change_E", num(x.change_energy)},
                      {"change_EF", num(x.change_fourier_energy)}});
    }
    return csv(rows);
  }
  ordered_json rows = ordered_json::array();
  for (const auto& x : r.rows) {
    rows.push_back({{"resolution", x.resolution},
                    {"steiner_level", x.steiner_level},
                    {"E", x.energy},
                    {"EF", x.fourier_energy},
                    {"error_E", x.error_energy},
                    {"error_EF", x.error_fourier_energy},
                    {"change_E", x.change_energy},
                    {"change_EF", x.change_fourier_energy}});
  }
  ordered_json j{{"generator", spec_json(r.spec)},
                 {"oracle", {{"E", r.oracle.energy},
                             {"EF", r.oracle.fourier_energy},
                             {"fine_resolution", r.oracle.fine_resolution}}},
                 {"rows", rows},
                 {"order_E", jnum(r.order_energy)},
                 {"order_EF", jnum(r.order_fourier_energy)}};
  return dump(j);
}

}  // namespace cobsig
