#include "cobsig/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cobsig/energy.hpp"
#include "cobsig/error.hpp"
#include "cobsig/generators.hpp"
#include "cobsig/mesh_io.hpp"
#include "cobsig/report_io.hpp"
#include "cobsig/signalops.hpp"
#include "cobsig/verify.hpp"

namespace cobsig::cli {

namespace {

struct NoiseArgs {
  std::optional<Index> center_vertex;
  std::vector<double> center_point;
  double delta0 = 0.0;
  double delta = 0.0;
  double epsilon = 0.5;

  void add(CLI::App* app, bool with_epsilon) {
    app->add_option("--center-vertex", center_vertex, "Vertex index of the noise center p");
    app->add_option("--center-point", center_point, "Coordinates; the nearest vertex becomes p")->expected(2, 3);
    app->add_option("--delta0", delta0, "Radius of the ball where a = epsilon")->required();
    app->add_option("--delta", delta, "Radius of the noise region U")->required();
    if (with_epsilon) app->add_option("--epsilon", epsilon, "Bump depth in (0, 1)")->required();
  }

  NoiseSpec resolve(const Signal& s) const {
    NoiseSpec spec{0, delta0, delta, epsilon};
    if (center_vertex && !center_point.empty()) {
      throw InvalidArgument("give either --center-vertex or --center-point, not both");
    }
    if (center_vertex) {
      spec.center = *center_vertex;
    } else if (!center_point.empty()) {
      spec.center = nearest_vertex(s.complex(), center_point);
    } else {
      throw InvalidArgument("a noise center is required (--center-vertex or --center-point)");
    }
    return spec;
  }
};

struct GenArgs {
  std::string kind = "square";
  int resolution = 16;
  double width = 1.0;
  double height = 1.0;
  double r0 = 1.0;
  double r1 = 1.2;
  std::vector<double> origin;

  void add(CLI::App* app, bool with_resolution) {
    app->add_option("--kind", kind, "square | rectangle | annular_shell")->required();
    if (with_resolution) app->add_option("--resolution", resolution, "Cells along x, or segments around the shell");
    app->add_option("--width", width, "Rectangle width");
    app->add_option("--height", height, "Rectangle or shell height");
    app->add_option("--r0", r0, "Shell inner radius");
    app->add_option("--r1", r1, "Shell outer radius");
    app->add_option("--origin", origin, "Rectangle lower-left corner")->expected(2);
  }

  GeneratorSpec spec() const {
    GeneratorSpec s;
    s.kind = parse_generator_kind(kind);
    s.resolution = resolution;
    s.width = width;
    s.height = height;
    s.r0 = r0;
    s.r1 = r1;
    if (origin.size() == 2) s.origin = {origin[0], origin[1]};
    return s;
  }
};

std::vector<std::size_t> select_simplices(const Signal& s, const std::string& predicate_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(predicate_text);
  } catch (const json::parse_error& e) {
    throw IoError(std::string("malformed predicate file: ") + e.what());
  }
  const auto& c = s.complex();
  std::vector<std::size_t> kept;
  if (doc.contains("simplices")) {
    kept = doc.at("simplices").get<std::vector<std::size_t>>();
  } else if (doc.contains("box")) {
    // Keep simplices whose centroid lies in the axis-aligned box.
    const auto& box = doc.at("box");
    const auto lo = box.value("min", std::vector<double>(c.ambient_dim(), -kInfinity));
    const auto hi = box.value("max", std::vector<double>(c.ambient_dim(), kInfinity));
    if (static_cast<int>(lo.size()) != c.ambient_dim() || static_cast<int>(hi.size()) != c.ambient_dim()) {
      throw IoError("predicate box bounds must have ambient_dim entries");
    }
    for (std::size_t i = 0; i < c.simplices().size(); ++i) {
      const auto& verts = c.simplices()[i].verts;
      bool inside = true;
      for (int a = 0; a < c.ambient_dim() && inside; ++a) {
        double m = 0.0;
        for (Index v : verts) m += c.vertex(v)[a];
        m /= static_cast<double>(verts.size());
        inside = m >= lo[a] && m <= hi[a];
      }
      if (inside) kept.push_back(i);
    }
  } else {
    throw IoError("predicate file needs a \"simplices\" list or a \"box\"");
  }
  return kept;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void emit(const std::string& text) {
    if (out_path_.empty()) {
      out_ << text;
    } else {
      write_text_file(out_path_, text);
    }
  }
  ReportFormat format() const { return parse_report_format(format_); }
  Signal load(const std::string& path) const { return read_mesh(path).signal; }

  std::ostream& out_;
  std::ostream& err_;
  std::string out_path_;
  std::string format_ = "json";
  int steiner_level_ = kDefaultSteinerLevel;
};

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Discrete relative cobordisms: geodesic energies, the Fourier relabeling, noise, filters and "
               "composition, with numerical checks of the energy inequalities.",
               "cobsig"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", out_path_, "Write the report or mesh to this file instead of stdout");
  app.add_option("--format", format_, "Report format: json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--steiner-level", steiner_level_, "Steiner refinement level s (2^s sub-edges per edge)")
      ->check(CLI::Range(0, 6));

  int code = kExitOk;
  std::string mesh_path, left_path, right_path, corr_path, keep_path;
  GenArgs gen;
  NoiseArgs noise;
  bool no_hints = false;
  std::vector<double> eps_list{0.4, 0.2, 0.1, 0.05};
  std::string weighting = "conformal";
  std::vector<int> levels;
  int fine_resolution = 0;

  auto* generate = app.add_subcommand("generate", "Write a canonical test mesh (square, rectangle, annular shell) "
                                                  "with its closed-form reference values as hints");
  gen.add(generate, true);
  generate->callback([&] {
    const auto spec = gen.spec();
    auto s = cobsig::generate(spec);
    emit(format_mesh(s, spec.resolution));
  });

  auto* validate_cmd = app.add_subcommand("validate", "Check the relative-cobordism invariants of a mesh: manifold "
                                                      "facets, coherent orientation, disjoint X/Y and A/B, corners");
  validate_cmd->add_option("mesh", mesh_path, "Mesh file")->required();
  validate_cmd->callback([&] {
    const auto complex = parse_complex(read_text_file(mesh_path));
    const auto report = validate(complex);
    emit(format_report(report, format()));
    code = report.ok ? kExitOk : kExitFailure;
  });

  auto* energy_cmd = app.add_subcommand("energy", "Energy E(M): integral of the geodesic distance to A over M, "
                                                  "with E(F(M)) and their ratio");
  energy_cmd->add_option("mesh", mesh_path, "Mesh file")->required();
  energy_cmd->callback([&] {
    const auto mesh = read_mesh(mesh_path);
    emit(format_report(summarize_energy(mesh.signal, steiner_level_), mesh.resolution, format()));
  });

  auto* fourier_cmd = app.add_subcommand("fourier", "Fourier transform of a signal: swap the roles of (X, Y) and "
                                                    "(A, B); reports the energies of F(M) and writes F(M) with --mesh-out");
  std::string mesh_out;
  fourier_cmd->add_option("mesh", mesh_path, "Mesh file")->required();
  fourier_cmd->add_option("--mesh-out", mesh_out, "Write the relabeled mesh here");
  fourier_cmd->callback([&] {
    const auto mesh = read_mesh(mesh_path);
    const auto f = fourier_relabel(mesh.signal);
    if (!mesh_out.empty()) write_mesh(mesh_out, f, mesh.resolution);
    emit(format_report(summarize_energy(f, steiner_level_), mesh.resolution, format()));
  });

  auto* noise_cmd = app.add_subcommand("noise", "Apply a noise (U, h): conformal bump a_eps on the delta-ball "
                                                "around p, h = g outside U; writes the deformed mesh");
  noise_cmd->add_option("mesh", mesh_path, "Mesh file")->required();
  noise.add(noise_cmd, true);
  noise_cmd->callback([&] {
    const auto mesh = read_mesh(mesh_path);
    const auto spec = noise.resolve(mesh.signal);
    emit(format_mesh(apply_noise(mesh.signal, spec, steiner_level_), mesh.resolution));
  });

  auto* filter_cmd = app.add_subcommand("filter", "Extract a filter M' of M keeping all of A; cut facets become B'");
  filter_cmd->add_option("mesh", mesh_path, "Mesh file")->required();
  filter_cmd->add_option("--keep", keep_path, "Predicate file: {\"simplices\": [...]} or {\"box\": {\"min\", \"max\"}}")
      ->required();
  filter_cmd->callback([&] {
    const auto mesh = read_mesh(mesh_path);
    const auto kept = select_simplices(mesh.signal, read_text_file(keep_path));
    emit(format_mesh(extract_filter(mesh.signal, kept).signal));
  });

  auto* compose_cmd = app.add_subcommand("compose", "Compose M and M' along Y = X' into M'' with A'' = A u A', "
                                                    "B'' = B u B'");
  compose_cmd->add_option("--left", left_path, "Mesh M")->required();
  compose_cmd->add_option("--right", right_path, "Mesh M'")->required();
  compose_cmd->add_option("--corr", corr_path, "Correspondence file")->required();
  compose_cmd->callback([&] {
    const auto m = load(left_path);
    const auto mp = load(right_path);
    emit(format_mesh(compose(m, mp, read_correspondence(corr_path))));
  });

  auto* bounds_cmd = app.add_subcommand(
      "verify-thm1",
      "Check the two-sided bound on E(F(M))/E(M) in terms of volumes, diameters and the boundary injectivity "
      "radii i_A, i_X. With --keep, instead check the filter inequalities E(M'_g) <= E(M_g) and "
      "E(M'_g) <= E(M_h) for a noise U outside M'");
  bounds_cmd->add_option("mesh", mesh_path, "Mesh file")->required();
  bounds_cmd->add_flag("--no-hints", no_hints, "Estimate i_A, i_X heuristically even when hints exist");
  bounds_cmd->add_option("--keep", keep_path, "Filter predicate file");
  bounds_cmd->add_option("--center-vertex", noise.center_vertex, "Noise center vertex (filter check)");
  bounds_cmd->add_option("--center-point", noise.center_point, "Noise center point (filter check)")->expected(2, 3);
  bounds_cmd->add_option("--delta0", noise.delta0, "Noise inner radius (filter check)");
  bounds_cmd->add_option("--delta", noise.delta, "Noise radius (filter check)");
  bounds_cmd->add_option("--epsilon", noise.epsilon, "Noise depth (filter check)");
  bounds_cmd->callback([&] {
    const auto s = load(mesh_path);
    if (!keep_path.empty()) {
      const auto kept = select_simplices(s, read_text_file(keep_path));
      const auto report = check_filter(s, extract_filter(s, kept), noise.resolve(s), steiner_level_);
      emit(format_report(report, format()));
      code = report.holds() ? kExitOk : kExitFailure;
      return;
    }
    BoundOptions opts;
    opts.steiner_level = steiner_level_;
    opts.use_injectivity_hints = !no_hints;
    const auto report = check_thm1_bounds(s, opts);
    emit(format_report(report, format()));
    code = report.holds() ? kExitOk : kExitFailure;
  });

  auto* compose_check_cmd = app.add_subcommand("verify-thm2", "Check the composition inequalities E(M'') <= E(M) + E(M') and "
                                                 "E(F(M'')) >= E(F(M))");
  compose_check_cmd->add_option("--left", left_path, "Mesh M")->required();
  compose_check_cmd->add_option("--right", right_path, "Mesh M'")->required();
  compose_check_cmd->add_option("--corr", corr_path, "Correspondence file")->required();
  compose_check_cmd->callback([&] {
    const auto report = check_composition(load(left_path), load(right_path), read_correspondence(corr_path),
                                          steiner_level_);
    emit(format_report(report, format()));
    code = report.holds() ? kExitOk : kExitFailure;
  });

  auto* sweep = app.add_subcommand("sweep-eps", "Sweep the bump depth eps and compare E(F)/E with the expansion "
                                                "(beta/gamma)(1 + C eps^((k+2)/2)); fits the residual order");
  sweep->add_option("mesh", mesh_path, "Mesh file")->required();
  noise.add(sweep, false);
  sweep->add_option("--eps", eps_list, "Strictly descending eps values in (0, 1)")->delimiter(',');
  sweep->add_option("--weighting", weighting, "Vertex weights for beta, gamma: conformal | mesh")
      ->check(CLI::IsMember({"conformal", "mesh"}));
  sweep->callback([&] {
    const auto s = load(mesh_path);
    SweepOptions opts;
    opts.steiner_level = steiner_level_;
    opts.weighting = parse_sweep_weighting(weighting);
    const auto report = eps_sweep(s, noise.resolve(s), eps_list, opts);
    emit(format_report(report, format()));
    code = report.holds ? kExitOk : kExitFailure;
  });

  auto* refine = app.add_subcommand("refine-study", "Energies of a generator at increasing resolution against the "
                                                    "grid oracle");
  gen.add(refine, false);
  refine->add_option("--levels", levels, "Resolutions, e.g. 16,32,64")->delimiter(',')->required();
  refine->add_option("--oracle-resolution", fine_resolution, "Oracle grid resolution (default per kind)");
  refine->callback([&] {
    emit(format_report(refinement_study(gen.spec(), levels, steiner_level_, fine_resolution), format()));
  });

  auto* oracle = app.add_subcommand("oracle", "Midpoint-rule reference values from the closed-form distance "
                                              "functions, independent of the mesh code");
  gen.add(oracle, false);
  oracle->add_option("--fine-resolution", fine_resolution, "Grid resolution (default per kind)");
  oracle->callback([&] {
    const auto spec = gen.spec();
    const int n = fine_resolution > 0 ? fine_resolution : default_oracle_resolution(spec.kind);
    emit(format_report(grid_oracle(spec, n), spec, format()));
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out_, err_);
    return kExitUsage;
  } catch (const IoError& e) {
    err_ << "cobsig: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err_ << "cobsig: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err_ << "cobsig: " << e.what() << "\n";
    return kExitFailure;
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cobsig::cli
