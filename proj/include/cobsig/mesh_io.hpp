#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cobsig/signal.hpp"
#include "cobsig/signalops.hpp"

namespace cobsig {

// JSON mesh file: "dim", "ambient_dim", "vertices", "simplices"
// ({"verts", "sign"}), "labels" ({"X": [[...]], ...}), optional "metric"
// ([{"edge": [u, v], "length": l}]), "hints" and "resolution".
struct MeshFile {
  Signal signal;
  std::optional<int> resolution;
};

// Builds the complex without validating invariants or the metric.
CobordismComplex parse_complex(const std::string& text);

MeshFile parse_mesh(const std::string& text);
MeshFile read_mesh(const std::string& path);

// The metric is written only when it is not the induced one.
std::string format_mesh(const Signal& signal, std::optional<int> resolution = std::nullopt);
void write_mesh(const std::string& path, const Signal& signal, std::optional<int> resolution = std::nullopt);

// {"pairs": [[y, x'], ...], "tolerance": t}; a bare array of pairs is accepted
// with the default tolerance.
Correspondence parse_correspondence(const std::string& text);
Correspondence read_correspondence(const std::string& path);
std::string format_correspondence(const Correspondence& corr);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cobsig
