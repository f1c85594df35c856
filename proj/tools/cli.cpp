#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <set>
#include <sstream>

#include "lmm/densities.hpp"
#include "lmm/errors.hpp"
#include "lmm/fourier_direct.hpp"
#include "lmm/solver.hpp"
#include "lmm/validation.hpp"

namespace lmm::cli {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << std::setprecision(12) << v;
  return s.str();
}

void require_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw UsageError(where + ": expected a JSON object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) throw UsageError(where + ": unknown key '" + key + "'");
  }
}

double number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw UsageError(where + ": missing '" + key + "'");
  if (!obj.at(key).is_number()) throw UsageError(where + ": '" + key + "' must be a number");
  return obj.at(key).get<double>();
}

int integer(const json& obj, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw UsageError("config: '" + key + "' must be an integer");
  return v.get<int>();
}

models::KineticForm parse_kinetic(const json& j) {
  const std::string where = "config.model.kinetic";
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw UsageError(where + ": expected an object with a string 'type'");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "pure_quadratic") {
    require_keys(j, {"type"}, where);
    return models::PureQuadratic{};
  }
  if (type == "nonrelativistic") {
    require_keys(j, {"type", "mu"}, where);
    return models::NonrelativisticReduced{number(j, "mu", where)};
  }
  if (type == "semirelativistic") {
    require_keys(j, {"type", "m1", "m2"}, where);
    return models::Semirelativistic{number(j, "m1", where), number(j, "m2", where)};
  }
  throw UsageError(where + ": unknown type '" + type + "'");
}

models::PotentialForm parse_potential(const json& j) {
  const std::string where = "config.model.potential";
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw UsageError(where + ": expected an object with a string 'type'");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "coulomb") {
    require_keys(j, {"type", "a"}, where);
    return models::Coulomb{number(j, "a", where)};
  }
  if (type == "linear") {
    require_keys(j, {"type", "a"}, where);
    return models::Linear{number(j, "a", where)};
  }
  if (type == "cornell") {
    require_keys(j, {"type", "kappa", "a", "c"}, where);
    return models::Cornell{number(j, "kappa", where), number(j, "a", where), number(j, "c", where)};
  }
  if (type == "gaussian") {
    require_keys(j, {"type", "a", "b"}, where);
    return models::Gaussian{number(j, "a", where), number(j, "b", where)};
  }
  if (type == "yukawa") {
    require_keys(j, {"type", "a", "mu"}, where);
    return models::Yukawa{number(j, "a", where), number(j, "mu", where)};
  }
  throw UsageError(where + ": unknown type '" + type + "'");
}

models::ModelDefinition builtin(const std::string& name) {
  try {
    return models::builtin_model(name);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
}

void validate(const RunConfig& c) {
  if (c.n < 1) throw UsageError("n must be >= 1, got " + std::to_string(c.n));
  if (!(c.h > 0.0) || !std::isfinite(c.h)) throw UsageError("h must be positive, got " + fmt(c.h));
  if (c.l < 0) throw UsageError("l must be >= 0, got " + std::to_string(c.l));
  if (c.n_states < 1 || c.n_states > c.n) {
    throw UsageError("states must be in [1, n], got " + std::to_string(c.n_states));
  }
  try {
    models::validate(c.model.kinetic);
    models::validate(c.model.potential);
  } catch (const ParameterError& e) {
    throw UsageError(std::string("model: ") + e.what());
  }
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + config.output + "'");
  file << text;
}

std::string solve_csv(const SolveResult& r) {
  std::ostringstream s;
  s << "label,energy";
  for (int i = 0; i < r.mesh.n(); ++i) s << ",c_" << i + 1;
  s << '\n';
  for (int k = 0; k < r.size(); ++k) {
    s << r.labels[k] << ',' << fmt(r.energies[k]);
    for (int i = 0; i < r.mesh.n(); ++i) s << ',' << fmt(r.states(i, k));
    s << '\n';
  }
  return s.str();
}

std::string solve_json(const RunConfig& c, const SolveResult& r) {
  json j;
  j["model"] = c.model.name;
  j["n"] = r.mesh.n();
  j["h"] = r.mesh.h();
  j["l"] = r.l;
  j["labels"] = r.labels;
  j["energies"] = r.energies;
  json states = json::array();
  for (int k = 0; k < r.size(); ++k) {
    std::vector<double> c(static_cast<std::size_t>(r.mesh.n()));
    for (int i = 0; i < r.mesh.n(); ++i) c[i] = r.states(i, k);
    states.push_back(c);
  }
  j["states"] = states;
  return j.dump(2) + "\n";
}

int cmd_solve(const RunConfig& c, std::ostream& out) {
  const Mesh mesh = build_mesh(c.n, c.h);
  const SolveResult r = solve(mesh, c.model.spec(c.l), c.n_states);
  if (!c.output.empty()) {
    emit(c, out, c.format == OutputFormat::Json ? solve_json(c, r) : solve_csv(r));
  } else if (c.format == OutputFormat::Json) {
    out << solve_json(c, r);
    return 0;
  }
  out << "model " << c.model.name << ", N=" << c.n << ", h=" << fmt(c.h) << ", l=" << c.l << '\n';
  for (int k = 0; k < r.size(); ++k) {
    out << std::left << std::setw(6) << r.labels[k] << std::setprecision(c.model.report_decimals) << std::fixed
        << r.energies[k] << '\n';
  }
  out << std::defaultfloat;
  return 0;
}

struct ScanOptions {
  double h_min = 0.01;
  double h_max = 10.0;
  int points = 50;
  bool log_spacing = false;
  int state = 0;
};

int cmd_scan_h(const RunConfig& c, const ScanOptions& o, std::ostream& out) {
  if (!(o.h_min > 0.0) || !(o.h_min < o.h_max)) {
    throw UsageError("scan-h requires 0 < h-min < h-max");
  }
  if (o.points < 1) throw UsageError("scan-h requires points >= 1");
  if (o.state < 0 || o.state >= c.n) throw UsageError("scan-h: state index out of range");
  std::vector<double> grid(static_cast<std::size_t>(o.points));
  for (int k = 0; k < o.points; ++k) {
    const double t = o.points == 1 ? 0.0 : k / (o.points - 1.0);
    grid[k] = o.log_spacing ? o.h_min * std::pow(o.h_max / o.h_min, t)
                            : o.h_min + (o.h_max - o.h_min) * t;
  }
  std::ostringstream s;
  s << "h,energy\n";
  for (const auto& pt : scan_h(c.model.spec(c.l), c.n, grid, o.state)) {
    s << fmt(pt.h) << ',' << (pt.energy ? fmt(*pt.energy) : std::string()) << '\n';
  }
  emit(c, out, s.str());
  return 0;
}

struct DensityOptions {
  int state = 0;
  std::string variable = "p";
  double grid_max = -1.0;
  int grid_points = 400;
  bool with_analytic = false;
};

int cmd_density(const RunConfig& c, const DensityOptions& o, std::ostream& out) {
  if (o.variable != "p" && o.variable != "r") throw UsageError("variable must be 'p' or 'r'");
  if (o.state < 0 || o.state >= c.n) throw UsageError("density: state index out of range");
  if (o.grid_points < 1) throw UsageError("grid-points must be >= 1");
  const bool momentum = o.variable == "p";

  CoulombState ref_state = CoulombState::S1;
  if (o.with_analytic) {
    if (!c.builtin || c.model.name != "coulomb") {
      throw UsageError("--analytic is only available for the builtin coulomb model");
    }
    if (c.l == 0 && o.state == 0) {
      ref_state = CoulombState::S1;
    } else if (c.l == 0 && o.state == 1) {
      ref_state = CoulombState::S2;
    } else if (c.l == 1 && o.state == 0) {
      ref_state = CoulombState::P1;
    } else {
      throw UsageError("--analytic covers only 1S (l=0 state 0), 2S (l=0 state 1) and 1P (l=1 state 0)");
    }
  }

  const Mesh mesh = build_mesh(c.n, c.h);
  const SolveResult r = solve(mesh, c.model.spec(c.l), o.state + 1);
  std::vector<double> grid;
  if (o.grid_max > 0.0) {
    grid = uniform_grid(o.grid_max, o.grid_points);
  } else {
    grid = momentum ? default_momentum_grid(mesh, o.grid_points) : default_radius_grid(mesh, o.grid_points);
  }
  const DensityCurve curve = momentum ? momentum_density(r, o.state, grid) : radial_density(r, o.state, grid);
  std::vector<double> ref;
  if (o.with_analytic) {
    ref = analytic_coulomb_reference(ref_state, momentum ? DensityVariable::Momentum : DensityVariable::Radius, grid)
              .values;
  }

  std::ostringstream s;
  s << (o.with_analytic ? "x,density,analytic\n" : "x,density\n");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    s << fmt(grid[k]) << ',' << fmt(curve.values[k]);
    if (o.with_analytic) s << ',' << fmt(ref[k]);
    s << '\n';
  }
  emit(c, out, s.str());
  return 0;
}

int cmd_divergence_demo(const RunConfig& c, std::ostream& out) {
  if (c.n < 2) throw UsageError("divergence-demo needs n >= 2 (no off-diagonal element otherwise)");
  const Mesh mesh = build_mesh(c.n, c.h);
  std::ostringstream s;
  s << "i,j,element\n";
  int divergent = 0;
  for (int i = 0; i < c.n; ++i) {
    for (int j = 0; j < c.n; ++j) {
      s << i + 1 << ',' << j + 1 << ',';
      try {
        s << fmt(fourier_direct::coulomb_direct_element(mesh, i, j, c.l)) << '\n';
      } catch (const SingularityError&) {
        s << "DIVERGENT\n";
        ++divergent;
      }
    }
  }
  emit(c, out, s.str());
  out << "# " << divergent << " of " << c.n << " diagonal elements DIVERGENT: Q_" << c.l
      << " evaluated at argument 1\n";
  return 0;
}

int cmd_validate(const std::string& suite_name, std::ostream& out) {
  validation::Suite suite = validation::Suite::All;
  if (suite_name == "coulomb") {
    suite = validation::Suite::Coulomb;
  } else if (suite_name == "fulcher") {
    suite = validation::Suite::Fulcher;
  } else if (suite_name == "gaussian") {
    suite = validation::Suite::Gaussian;
  } else if (suite_name != "all") {
    throw UsageError("unknown suite '" + suite_name + "' (coulomb, fulcher, gaussian, all)");
  }
  bool all_ok = true;
  for (const auto& rep : validation::run_suite(suite)) {
    for (const auto& ch : rep.checks) {
      out << (ch.passed ? "  PASS  " : "  FAIL  ") << ch.name << ": value=" << fmt(ch.value)
          << " expected=" << fmt(ch.expected) << " delta=" << fmt(ch.value - ch.expected)
          << " tol=" << fmt(ch.tolerance);
      if (!ch.note.empty()) out << " (" << ch.note << ")";
      out << '\n';
    }
    out << (rep.passed() ? "[PASS] " : "[FAIL] ") << "criterion " << rep.id << ": " << rep.title << " ("
        << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << ")\n";
    all_ok = all_ok && rep.passed();
  }
  return all_ok ? 0 : 1;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("config: invalid JSON: ") + e.what());
  }
  require_keys(j, {"model", "n", "h", "l", "states", "output", "format"}, "config");
  RunConfig c;
  if (j.contains("model")) {
    const json& m = j.at("model");
    if (m.is_string()) {
      c.model = builtin(m.get<std::string>());
      c.builtin = true;
    } else {
      require_keys(m, {"name", "kinetic", "potential"}, "config.model");
      if (!m.contains("kinetic") || !m.contains("potential")) {
        throw UsageError("config.model: both 'kinetic' and 'potential' are required");
      }
      c.model.name = m.contains("name") && m.at("name").is_string() ? m.at("name").get<std::string>() : "custom";
      c.model.kinetic = parse_kinetic(m.at("kinetic"));
      c.model.potential = parse_potential(m.at("potential"));
      c.builtin = false;
    }
  }
  if (j.contains("n")) c.n = integer(j, "n");
  if (j.contains("h")) c.h = number(j, "h", "config");
  if (j.contains("l")) c.l = integer(j, "l");
  if (j.contains("states")) c.n_states = integer(j, "states");
  if (j.contains("output")) {
    if (!j.at("output").is_string()) throw UsageError("config: 'output' must be a string");
    c.output = j.at("output").get<std::string>();
  }
  if (j.contains("format")) {
    const std::string f = j.at("format").is_string() ? j.at("format").get<std::string>() : "";
    if (f == "csv") {
      c.format = OutputFormat::Csv;
    } else if (f == "json") {
      c.format = OutputFormat::Json;
    } else {
      throw UsageError("config: 'format' must be \"csv\" or \"json\"");
    }
  }
  return c;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lagrange-mesh solver for two-body bound states in momentum space", "lmm"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);

  struct Common {
    std::string config_path;
    std::string model;
    int n = 0;
    double h = 0.0;
    int l = 0;
    int states = 0;
    std::string output;
    std::string format;
  };
  Common common;
  ScanOptions scan;
  DensityOptions density;
  std::string suite = "all";

  auto add_common = [&common](CLI::App* sub) {
    sub->set_help_flag("--help", "print this help");
    sub->add_option("--config", common.config_path, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--model", common.model, "builtin model: coulomb, fulcher, gaussian");
    sub->add_option("--n", common.n, "mesh size N");
    sub->add_option("--h", common.h, "scale parameter h");
    sub->add_option("--l", common.l, "angular momentum l");
    sub->add_option("--states", common.states, "number of states");
    sub->add_option("--output", common.output, "output path (default: stdout)");
    sub->add_option("--format", common.format, "csv or json");
  };

  auto* solve_cmd = app.add_subcommand("solve", "solve a model and report the lowest levels");
  add_common(solve_cmd);

  auto* scan_cmd = app.add_subcommand("scan-h", "energy of one state versus h, CSV 'h,energy'");
  add_common(scan_cmd);
  scan_cmd->add_option("--h-min", scan.h_min, "smallest h");
  scan_cmd->add_option("--h-max", scan.h_max, "largest h");
  scan_cmd->add_option("--points", scan.points, "number of grid points");
  scan_cmd->add_flag("--log", scan.log_spacing, "logarithmic spacing");
  scan_cmd->add_option("--state", scan.state, "zero-based state index");

  auto* density_cmd = app.add_subcommand("density", "probability density, CSV 'x,density[,analytic]'");
  add_common(density_cmd);
  density_cmd->add_option("--state", density.state, "zero-based state index");
  density_cmd->add_option("--variable", density.variable, "p (momentum) or r (radius)");
  density_cmd->add_option("--grid-max", density.grid_max, "grid upper bound (default: heuristic)");
  density_cmd->add_option("--grid-points", density.grid_points, "number of grid points");
  density_cmd->add_flag("--analytic", density.with_analytic, "add the exact Coulomb density column");

  auto* demo_cmd = app.add_subcommand("divergence-demo", "direct Coulomb matrix elements and their divergent diagonal");
  add_common(demo_cmd);

  auto* validate_cmd = app.add_subcommand("validate", "run the reproduction checks");
  validate_cmd->set_help_flag("--help", "print this help");
  validate_cmd->add_option("--suite", suite, "coulomb, fulcher, gaussian or all");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(suite, out);

    CLI::App* sub = app.get_subcommands().front();
    RunConfig config;
    if (!common.config_path.empty()) {
      std::ifstream in(common.config_path);
      std::stringstream buf;
      buf << in.rdbuf();
      config = parse_config(buf.str());
    }
    if (sub->count("--model")) {
      config.model = builtin(common.model);
      config.builtin = true;
    }
    if (sub->count("--n")) config.n = common.n;
    if (sub->count("--h")) config.h = common.h;
    if (sub->count("--l")) config.l = common.l;
    if (sub->count("--states")) config.n_states = common.states;
    if (sub->count("--output")) config.output = common.output;
    if (sub->count("--format")) {
      if (common.format == "csv") {
        config.format = OutputFormat::Csv;
      } else if (common.format == "json") {
        config.format = OutputFormat::Json;
      } else {
        throw UsageError("--format must be csv or json");
      }
    }
    if (config.n_states < 0) config.n_states = std::max(1, std::min(3, config.n));
    validate(config);

    if (sub == solve_cmd) return cmd_solve(config, out);
    if (sub == scan_cmd) return cmd_scan_h(config, scan, out);
    if (sub == density_cmd) return cmd_density(config, density, out);
    if (sub == demo_cmd) return cmd_divergence_demo(config, out);
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace lmm::cli
