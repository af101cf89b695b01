#pragma once

#include <array>
#include <string>
#include <string_view>

#include "cobsig/signal.hpp"
#include "cobsig/signalops.hpp"

namespace cobsig {

enum class GeneratorKind { square, rectangle, annular_shell };

std::string_view to_string(GeneratorKind kind);
GeneratorKind parse_generator_kind(std::string_view name);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::square;
  int resolution = 16;
  // rectangle
  double width = 1.0;
  double height = 1.0;
  // annular shell; `height` is shared with the rectangle
  double r0 = 1.0;
  double r1 = 1.2;
  // lower-left corner for the planar kinds
  std::array<double, 2> origin{0.0, 0.0};
};

// Throws InvalidArgument on out-of-range parameters.
void check_generator_spec(const GeneratorSpec& spec);

// [0,1]^2 with n x n cells split along the (i,j)-(i+1,j+1) diagonal.
// X = {y=0}, Y = {y=1}, A = {x=0}, B = {x=1}.
Signal gen_square(int n);

// [ox, ox+w] x [oy, oy+h] with n cells along x and round(n h / w) along y.
Signal gen_rectangle(double width, double height, int n, std::array<double, 2> origin = {0.0, 0.0});

// {r0 <= r <= r1, 0 <= z <= height}; X = inner wall, Y = outer wall,
// A = bottom, B = top.
Signal gen_annular_shell(double r0, double r1, double height, int res);

Signal generate(const GeneratorSpec& spec);

// Closed-form values for the generator (E, EF, vol_*, diam_*, i_*).
Hints analytic_hints(const GeneratorSpec& spec);

// Matches Y of `lower` to X of `upper` by coordinates.
Correspondence stack_correspondence(const Signal& lower, const Signal& upper, double tolerance = 1e-9);

// Vertex of the mesh closest to `point` (ties to the lower index).
Index nearest_vertex(const CobordismComplex& complex, const Point& point);

}  // namespace cobsig
