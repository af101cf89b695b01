#include "cobsig/signal.hpp"

#include <sstream>

#include "cobsig/error.hpp"

namespace cobsig {

Signal::Signal(std::shared_ptr<const CobordismComplex> complex, MetricField metric, Hints hints)
    : complex_(std::move(complex)), metric_(std::move(metric)), hints_(std::move(hints)) {
  if (!complex_) throw InvalidArgument("signal requires a complex");
  const auto report = validate(*complex_);
  if (!report.ok) {
    std::ostringstream ss;
    ss << "complex is not a valid cobordism:";
    for (const auto& v : report.violations) ss << " [" << v.invariant << "]";
    throw StructureError(ss.str());
  }
  if (metric_.edges() != complex_->edges()) throw MetricError("metric edges do not match the complex");
  check_nondegenerate(*complex_, metric_);
}

Signal::Signal(Trusted, std::shared_ptr<const CobordismComplex> complex, MetricField metric, Hints hints)
    : complex_(std::move(complex)), metric_(std::move(metric)), hints_(std::move(hints)) {}

Signal Signal::with_metric(MetricField metric) const {
  if (&metric.edges() != &complex_->edges() && metric.edges() != complex_->edges()) {
    throw MetricError("metric edges do not match the complex");
  }
  check_nondegenerate(*complex_, metric);
  return Signal(Trusted{}, complex_, std::move(metric), {});
}

Signal Signal::with_hints(Hints hints) const { return Signal(Trusted{}, complex_, metric_, std::move(hints)); }

std::optional<double> Signal::hint(const std::string& name) const {
  auto it = hints_.find(name);
  if (it == hints_.end()) return std::nullopt;
  return it->second;
}

Signal make_signal(CobordismComplex complex, Hints hints) {
  auto ptr = std::make_shared<const CobordismComplex>(std::move(complex));
  auto metric = induced_metric(*ptr);
  return Signal(std::move(ptr), std::move(metric), std::move(hints));
}

ScalarField lumped_vertex_volume(const Signal& signal) {
  return lumped_vertex_volume(signal.complex(), signal.metric());
}

double total_volume(const Signal& signal) { return total_volume(signal.complex(), signal.metric()); }

double region_volume(const Signal& signal, Region region) {
  return region_volume(signal.complex(), signal.metric(), region);
}

}  // namespace cobsig
