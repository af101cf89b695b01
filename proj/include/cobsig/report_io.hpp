#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cobsig/complex.hpp"
#include "cobsig/energy.hpp"
#include "cobsig/verify.hpp"

namespace cobsig {

enum class ReportFormat { json, csv };
ReportFormat parse_report_format(std::string_view name);

// JSON reports are one object; CSV reports are a header plus one row per case.
std::string format_report(const ValidationReport& r, ReportFormat f);
std::string format_report(const EnergySummary& r, std::optional<int> resolution, ReportFormat f);
std::string format_report(const BoundReport& r, ReportFormat f);
std::string format_report(const ExpansionReport& r, ReportFormat f);
std::string format_report(const FilterReport& r, ReportFormat f);
std::string format_report(const CompositionReport& r, ReportFormat f);
std::string format_report(const OracleResult& r, const GeneratorSpec& spec, ReportFormat f);
std::string format_report(const ConvergenceReport& r, ReportFormat f);

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

}  // namespace cobsig
