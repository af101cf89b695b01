#include "cobsig/mesh_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cobsig/error.hpp"

namespace cobsig {

using nlohmann::json;

namespace {

template <typename T>
T get_field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw IoError(std::string("mesh file is missing field '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw IoError(std::string("mesh field '") + key + "': " + e.what());
  }
}

json parse_doc(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("malformed mesh JSON: ") + e.what());
  }
  if (!doc.is_object()) throw IoError("mesh file must be a JSON object");
  return doc;
}

CobordismComplex complex_from_doc(const json& doc) {

  const int dim = get_field<int>(doc, "dim");
  const int ambient = get_field<int>(doc, "ambient_dim");
  auto vertices = get_field<std::vector<Point>>(doc, "vertices");
  for (const auto& p : vertices) {
    if (static_cast<int>(p.size()) != ambient) throw IoError("vertex coordinate count differs from ambient_dim");
  }

  std::vector<OrientedSimplex> simplices;
  if (!doc.contains("simplices") || !doc.contains("labels")) throw IoError("mesh file needs 'simplices' and 'labels'");
  const auto& sarr = doc.at("simplices");
  if (!sarr.is_array()) throw IoError("'simplices' must be an array");
  for (const auto& s : sarr) {
    OrientedSimplex os;
    try {
      os.verts = s.at("verts").get<std::vector<Index>>();
      os.sign = s.value("sign", 1);
    } catch (const json::exception& e) {
      throw IoError(std::string("bad simplex entry: ") + e.what());
    }
    if (static_cast<int>(os.verts.size()) != dim + 1) throw IoError("simplex vertex count differs from dim + 1");
    simplices.push_back(std::move(os));
  }

  LabelMap labels;
  const auto& lobj = doc.at("labels");
  if (!lobj.is_object()) throw IoError("'labels' must be an object");
  for (const auto& [name, faces] : lobj.items()) {
    Region r;
    try {
      r = parse_region(name);
    } catch (const InvalidArgument& e) {
      throw IoError(e.what());
    }
    labels[r] = faces.get<std::vector<Face>>();
  }

  return CobordismComplex::build(std::move(vertices), std::move(simplices), std::move(labels));
}

}  // namespace

static MeshFile mesh_from_text(const std::string& text) {
  const json doc = parse_doc(text);
  auto complex = std::make_shared<const CobordismComplex>(complex_from_doc(doc));

  Hints hints;
  if (doc.contains("hints")) hints = doc.at("hints").get<Hints>();

  std::optional<MetricField> metric;
  if (doc.contains("metric")) {
    std::vector<double> lengths(complex->edges().size(), -1.0);
    for (const auto& entry : doc.at("metric")) {
      const auto e = entry.at("edge").get<std::vector<Index>>();
      if (e.size() != 2) throw IoError("metric edge must have two endpoints");
      const auto idx = complex->edge_index(e[0], e[1]);
      if (!idx) throw IoError("metric entry for a non-edge");
      lengths[*idx] = entry.at("length").get<double>();
    }
    for (double l : lengths) {
      if (l < 0.0) throw IoError("metric does not cover every edge");
    }
    metric = make_metric(*complex, std::move(lengths), MetricSource::deformed);
  } else {
    metric = induced_metric(*complex);
  }

  MeshFile out{Signal(complex, std::move(*metric), std::move(hints)), std::nullopt};
  if (doc.contains("resolution")) out.resolution = doc.at("resolution").get<int>();
  return out;
}

CobordismComplex parse_complex(const std::string& text) {
  try {
    return complex_from_doc(parse_doc(text));
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed mesh: ") + e.what());
  }
}

MeshFile parse_mesh(const std::string& text) {
  try {
    return mesh_from_text(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed mesh: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

MeshFile read_mesh(const std::string& path) { return parse_mesh(read_text_file(path)); }

std::string format_mesh(const Signal& signal, std::optional<int> resolution) {
  const auto& c = signal.complex();
  json doc;
  doc["dim"] = c.dim();
  doc["ambient_dim"] = c.ambient_dim();
  doc["vertices"] = c.vertices();
  json sarr = json::array();
  for (const auto& s : c.simplices()) sarr.push_back({{"verts", s.verts}, {"sign", s.sign}});
  doc["simplices"] = std::move(sarr);
  json labels = json::object();
  for (Region r : kAllRegions) labels[std::string(to_string(r))] = c.labeled(r);
  doc["labels"] = std::move(labels);
  if (signal.metric().source() != MetricSource::induced) {
    json marr = json::array();
    const auto& edges = c.edges();
    const auto lengths = signal.metric().lengths();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      marr.push_back({{"edge", {edges[e].u, edges[e].v}}, {"length", lengths[e]}});
    }
    doc["metric"] = std::move(marr);
  }
  if (!signal.hints().empty()) doc["hints"] = signal.hints();
  if (resolution) doc["resolution"] = *resolution;
  return doc.dump() + "\n";
}

void write_mesh(const std::string& path, const Signal& signal, std::optional<int> resolution) {
  write_text_file(path, format_mesh(signal, resolution));
}

Correspondence parse_correspondence(const std::string& text) {
  Correspondence corr;
  try {
    const auto doc = json::parse(text);
    const json* pairs = &doc;
    if (doc.is_object()) {
      pairs = &doc.at("pairs");
      corr.tolerance = doc.value("tolerance", corr.tolerance);
    }
    for (const auto& p : *pairs) {
      const auto v = p.get<std::vector<Index>>();
      if (v.size() != 2) throw IoError("correspondence entries must be pairs");
      corr.vertex_map.emplace_back(v[0], v[1]);
    }
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed correspondence: ") + e.what());
  }
  return corr;
}

Correspondence read_correspondence(const std::string& path) { return parse_correspondence(read_text_file(path)); }

std::string format_correspondence(const Correspondence& corr) {
  json pairs = json::array();
  for (const auto& [a, b] : corr.vertex_map) pairs.push_back({a, b});
  return json{{"pairs", pairs}, {"tolerance", corr.tolerance}}.dump() + "\n";
}

}  // namespace cobsig
