#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cobsig {

// Per-vertex real values, ordered by vertex index.
struct ScalarField {
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(std::vector<double> v) : values(std::move(v)) {}
  ScalarField(std::size_t n, double fill) : values(n, fill) {}

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
  std::span<const double> span() const { return values; }
};

}  // namespace cobsig
