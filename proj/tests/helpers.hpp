#pragma once

#include <cmath>

#include "cobsig/complex.hpp"
#include "cobsig/signal.hpp"

namespace cobsig::test {

// Two triangles forming the unit square; X bottom, Y top, A left, B right.
inline CobordismComplex two_triangle_square(LabelMap labels = {}) {
  if (labels.empty()) {
    labels = {{Region::X, {{0, 1}}}, {Region::Y, {{2, 3}}}, {Region::A, {{0, 3}}}, {Region::B, {{1, 2}}}};
  }
  return CobordismComplex::build({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{{0, 1, 2}, 1}, {{0, 2, 3}, 1}},
                                 std::move(labels));
}

inline double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace cobsig::test
