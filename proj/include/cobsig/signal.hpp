#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "cobsig/complex.hpp"
#include "cobsig/metric.hpp"

namespace cobsig {

// Named ground-truth values attached by generators: "E", "EF", "i_A", "i_X",
// "vol_M", "vol_A", "vol_X", "diam_M", "diam_A", "diam_X".
using Hints = std::map<std::string, double>;

// A validated cobordism complex paired with a metric. Signals are values:
// every operation returns a new one and inputs are never modified.
class Signal {
 public:
  // Throws StructureError if the complex fails validation and MetricError if
  // the metric is degenerate on it.
  Signal(std::shared_ptr<const CobordismComplex> complex, MetricField metric, Hints hints = {});

  // Same complex (already validated), different metric. Hints are dropped
  // because they describe the original geometry.
  Signal with_metric(MetricField metric) const;
  Signal with_hints(Hints hints) const;

  const CobordismComplex& complex() const { return *complex_; }
  const std::shared_ptr<const CobordismComplex>& complex_ptr() const { return complex_; }
  const MetricField& metric() const { return metric_; }
  const Hints& hints() const { return hints_; }
  std::optional<double> hint(const std::string& name) const;

  int dim() const { return complex_->dim(); }
  // k in d = k + 2.
  int k() const { return complex_->dim() - 2; }

 private:
  struct Trusted {};
  Signal(Trusted, std::shared_ptr<const CobordismComplex> complex, MetricField metric, Hints hints);

  std::shared_ptr<const CobordismComplex> complex_;
  MetricField metric_;
  Hints hints_;
};

// Builds a Signal with the induced metric.
Signal make_signal(CobordismComplex complex, Hints hints = {});

ScalarField lumped_vertex_volume(const Signal& signal);
double total_volume(const Signal& signal);
double region_volume(const Signal& signal, Region region);

}  // namespace cobsig
