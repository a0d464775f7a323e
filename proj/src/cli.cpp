#include "liereach/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "liereach/analysis.hpp"
#include "liereach/config.hpp"
#include "liereach/dynamics.hpp"
#include "liereach/errors.hpp"
#include "liereach/presets.hpp"
#include "liereach/random.hpp"
#include "liereach/report.hpp"

namespace liereach {

using nlohmann::json;

namespace {

struct Common {
  std::string config;
  std::string preset;
  std::string rep;
  int cap = 0;
  int iter_cap = 0;
  int k_max = -1;
  std::uint64_t seed = 42;
  int threads = 1;
  std::string out_dir;
  std::string format = "json";

  CLI::Option* cap_opt = nullptr;
  CLI::Option* iter_cap_opt = nullptr;
  CLI::Option* k_max_opt = nullptr;
};

void add_source(CLI::App* app, Common& c) {
  app->add_option("CONFIG", c.config, "System config file (*.sysconfig, JSON schema v1)");
  app->add_option("--preset", c.preset, "Built-in system: " + [] {
    std::string names;
    for (const auto& p : preset_list()) names += (names.empty() ? "" : ", ") + p.name;
    return names;
  }());
  app->add_option("--rep", c.rep, "JSON file with a rep block overriding the system's representation");
  app->add_option("--seed", c.seed, "Seed for every random choice (default 42)");
  app->add_option("--threads", c.threads, "Worker threads; results do not depend on it")->check(CLI::PositiveNumber);
  app->add_option("--out", c.out_dir, "Write the output files into this directory instead of stdout");
}

void add_caps(CLI::App* app, Common& c) {
  c.cap_opt = app->add_option("--cap", c.cap, "PBW order cap for closures")->check(CLI::PositiveNumber);
  c.iter_cap_opt = app->add_option("--iter-cap", c.iter_cap, "Bracketing rounds per closure")->check(CLI::PositiveNumber);
  c.k_max_opt = app->add_option("--k-max", c.k_max, "Largest k in the ad_{H0}^k seeds of C (default: the cap)");
}

void add_format(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "text"}));
}

SystemConfig load_system(const Common& c) {
  if (!c.config.empty() && !c.preset.empty()) throw ArgumentError("give either CONFIG or --preset, not both");
  if (c.config.empty() && c.preset.empty()) throw ArgumentError("a CONFIG file or --preset NAME is required");
  SystemConfig cfg = c.config.empty() ? preset_config(c.preset) : load_config(c.config);
  if (c.cap_opt && c.cap_opt->count()) cfg.caps.order_cap = c.cap;
  if (c.iter_cap_opt && c.iter_cap_opt->count()) cfg.caps.iter_cap = c.iter_cap;
  if (c.k_max_opt && c.k_max_opt->count()) cfg.caps.k_max = c.k_max;
  cfg.caps.seed = c.seed;
  cfg.caps.threads = c.threads;
  return cfg;
}

std::optional<RepSpec> rep_override(const Common& c, const ControlSystem& s) {
  if (c.rep.empty()) return std::nullopt;
  std::ifstream in(c.rep);
  if (!in) throw ParseError("cannot read rep file " + c.rep);
  std::ostringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ParseError("rep file is not valid JSON: " + std::string(e.what()));
  }
  if (j.is_object() && j.contains("rep")) j = j["rep"];
  return parse_rep_spec(j, s.env.dim());
}

Representation require_rep(const Common& c, const ControlSystem& s) {
  std::optional<RepSpec> spec = rep_override(c, s);
  if (!spec) spec = s.rep;
  if (!spec) throw ArgumentError("system " + s.name + " has no representation; pass --rep FILE");
  return Representation(s.env, *spec);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Sends `content` to stdout, or to DIR/name when --out is given.
void emit(const Common& c, const std::string& name, const std::string& content, std::ostream& out) {
  if (c.out_dir.empty()) {
    out << content;
    return;
  }
  std::filesystem::create_directories(c.out_dir);
  const std::filesystem::path path = std::filesystem::path(c.out_dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
  out << "wrote " << path.string() << "\n";
}

void emit_report(const Common& c, const std::string& stem, const json& report, std::string (*text)(const json&),
                 std::ostream& out) {
  if (c.format == "text")
    emit(c, stem + ".txt", text(report), out);
  else
    emit(c, stem + ".json", report.dump(2) + "\n", out);
}

json state_json(const StateVector& v) {
  json a = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(json::array({v(k).real(), v(k).imag()}));
  return a;
}

StateVector basis_state(int size, int index) {
  if (index < 0 || index >= size)
    throw ArgumentError("basis index " + std::to_string(index) + " outside 0.." + std::to_string(size - 1));
  StateVector v = StateVector::Zero(size);
  v(index) = 1.0;
  return v;
}

// Experiment parameters: command-line flag, else the config's experiment
// block of the same type, else the built-in default.
struct Block {
  json j = json::object();

  template <typename T>
  T get(CLI::Option* opt, const T& flag, const std::string& key) const {
    if (opt->count() || !j.contains(key)) return flag;
    try {
      return j[key].get<T>();
    } catch (const json::exception& e) {
      throw ParseError("experiment field '" + key + "': " + e.what());
    }
  }
};

Block experiment_block(const SystemConfig& cfg, const std::string& type) {
  for (const auto& b : cfg.experiments)
    if (b.is_object() && b.value("type", "") == type) return Block{b};
  return {};
}

struct ExperimentArgs {
  Common common;
  int x = 0, y = 1;
  double s = 1.0, t = 1.0;
  std::vector<int> ns;
  std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4};
  int grid = 100;
  int initial = 0;
  int targets = 5;
  ReachBudget budget;
  CLI::Option *x_opt = nullptr, *y_opt = nullptr, *s_opt = nullptr, *t_opt = nullptr, *ns_opt = nullptr,
              *eps_opt = nullptr, *grid_opt = nullptr, *targets_opt = nullptr, *segments_opt = nullptr,
              *restarts_opt = nullptr, *iterations_opt = nullptr;
};

ComplexMatrix generator_matrix(const Representation& rep, const std::vector<EnvElement>& gens, int index,
                               const std::string& flag) {
  if (index < 0 || index >= static_cast<int>(gens.size()))
    throw ArgumentError(flag + " " + std::to_string(index) + " outside 0.." + std::to_string(gens.size() - 1));
  return rep.env_to_matrix(gens[static_cast<std::size_t>(index)]);
}

int max_order(const std::vector<EnvElement>& gens) {
  int n = 0;
  for (const auto& g : gens) n = std::max(n, g.order().value_or(0));
  return n;
}

void run_flow_experiment(const std::string& kind, ExperimentArgs& a, std::ostream& out) {
  SystemConfig cfg = load_system(a.common);
  const ControlSystem& s = cfg.system;
  Representation rep = require_rep(a.common, s);
  const Block block = experiment_block(cfg, kind);
  const std::vector<EnvElement> gens = system_generators(s);
  const int top = rep.interior_top(std::max(1, max_order(gens)));

  if (kind == "trotter" || kind == "commutator") {
    const int x = block.get(a.x_opt, a.x, "x"), y = block.get(a.y_opt, a.y, "y");
    const double sv = block.get(a.s_opt, a.s, "s");
    std::vector<int> ns = block.get(a.ns_opt, a.ns, "ns");
    if (ns.empty()) ns = kind == "trotter" ? std::vector<int>{64, 128, 256, 512, 1024} : std::vector<int>{4, 16, 64, 256};
    const auto probes = probe_states(rep.size(), top, a.common.seed);
    const ComplexMatrix xm = generator_matrix(rep, gens, x, "--x"), ym = generator_matrix(rep, gens, y, "--y");
    FlowExperimentResult r = kind == "trotter" ? trotter_sum_curve(xm, ym, sv, ns, probes)
                                               : trotter_commutator_curve(xm, ym, sv, ns, probes);
    std::ostringstream csv;
    write_trotter_csv(csv, r);
    emit(a.common, kind + ".csv", csv.str(), out);
    if (!a.common.out_dir.empty()) out << "fitted_rate: " << format_number(r.fitted_rate) << "\n";
    return;
  }

  if (kind == "attainability") {
    const int x = block.get(a.x_opt, a.x, "x");
    const double t = block.get(a.t_opt, a.t, "t");
    const std::vector<double> eps = block.get(a.eps_opt, a.eps, "eps");
    const int grid = block.get(a.grid_opt, a.grid, "grid_points");
    const StateVector psi0 = basis_state(rep.size(), a.initial);
    // X is a control Hamiltonian; H0 is the drift.
    if (x < 0 || x >= static_cast<int>(s.controls.size()))
      throw ArgumentError("--x " + std::to_string(x) + " is not a control index");
    FlowExperimentResult r = attainability_experiment(rep.env_to_matrix(s.h0),
                                                      rep.env_to_matrix(s.controls[static_cast<std::size_t>(x)]), t,
                                                      eps, psi0, grid);
    std::ostringstream csv;
    write_attainability_csv(csv, r);
    emit(a.common, "attainability.csv", csv.str(), out);
    if (!a.common.out_dir.empty()) {
      out << "fitted_rate: " << format_number(r.fitted_rate) << "\n";
      out << "bound_ok: " << (r.bound_ok ? "true" : "false") << "\n";
      out << "M: " << format_number(r.m_estimate) << "\n";
    }
    if (!r.bound_ok) throw std::runtime_error("attainability bound violated");
    return;
  }

  // reach
  ReachBudget budget = a.budget;
  budget.segments = block.get(a.segments_opt, budget.segments, "segments");
  budget.restarts = block.get(a.restarts_opt, budget.restarts, "restarts");
  budget.iterations = block.get(a.iterations_opt, budget.iterations, "iterations");
  budget.seed = a.common.seed;
  budget.threads = a.common.threads;
  const int targets = block.get(a.targets_opt, a.targets, "targets");
  const MatrixSystem ms = realize(s, rep);
  const StateVector psi0 = basis_state(rep.size(), a.initial);
  Rng rng(a.common.seed);
  std::ostringstream csv;
  csv << "target,fidelity,evaluations,best_restart\n";
  for (int k = 0; k < targets; ++k) {
    const StateVector target = rng.state(rep.size(), top);
    ReachBudget b = budget;
    b.seed = budget.seed + static_cast<std::uint64_t>(k);
    ReachResult r = reach_probe(ms, psi0, target, b);
    csv << k << "," << format_number(r.fidelity) << "," << r.evaluations << "," << r.best_restart << "\n";
    if (!a.common.out_dir.empty()) {
      std::ostringstream sched;
      write_schedule_csv(sched, r.schedule, static_cast<int>(ms.controls.size()));
      emit(a.common, "schedule_" + std::to_string(k) + ".csv", sched.str(), out);
    }
  }
  emit(a.common, "reach.csv", csv.str(), out);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"liereach: exact Lie-algebraic controllability analysis of quantum control systems"};
  app.name("liereach");
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common analyze_c, closure_c, coverage_c, simulate_c, presets_c;
  ExperimentArgs exp;

  CLI::App* analyze = app.add_subcommand("analyze", "Classify controllability and emit a report");
  add_source(analyze, analyze_c);
  add_caps(analyze, analyze_c);
  add_format(analyze, analyze_c);

  CLI::App* closure = app.add_subcommand("closure", "Compute the Lie closure of the system and its growth with the cap");
  add_source(closure, closure_c);
  add_caps(closure, closure_c);
  add_format(closure, closure_c);

  int order = 0;
  CLI::App* coverage = app.add_subcommand("coverage", "PBW coverage of the closure up to an order");
  add_source(coverage, coverage_c);
  add_caps(coverage, coverage_c);
  add_format(coverage, coverage_c);
  coverage->add_option("--order", order, "Largest monomial order to cover (default: every order up to the cap)")
      ->check(CLI::PositiveNumber);

  std::string schedule_path;
  int sim_initial = 0, sim_target = -1;
  CLI::App* simulate = app.add_subcommand("simulate", "Propagate a state under a piecewise-constant schedule");
  add_source(simulate, simulate_c);
  add_format(simulate, simulate_c);
  simulate->add_option("--schedule", schedule_path, "CSV schedule with rows duration,u1,...,um")->required();
  simulate->add_option("--initial", sim_initial, "Basis index of the initial state (default 0)");
  simulate->add_option("--target", sim_target, "Basis index of the fidelity target (default: the initial state)");

  CLI::App* experiment = app.add_subcommand("experiment", "Numerical experiments emitting CSV curves");
  experiment->require_subcommand(1);
  std::map<std::string, CLI::App*> kinds;
  for (const std::string kind : {"trotter", "commutator", "attainability", "reach"}) {
    const std::string about = kind == "trotter"         ? "Product formula error against n"
                              : kind == "commutator"    ? "Commutator product error against n"
                              : kind == "attainability" ? "Weak-drift deviation against epsilon with its bound"
                                                        : "Best fidelity to random targets";
    CLI::App* sub = experiment->add_subcommand(kind, about);
    add_source(sub, exp.common);
    if (kind == "trotter" || kind == "commutator") {
      exp.x_opt = sub->add_option("--x", exp.x, "Index of X among the generators (H0 when nonzero, then controls)");
      exp.y_opt = sub->add_option("--y", exp.y, "Index of Y among the generators");
      exp.s_opt = sub->add_option("--s", exp.s, "Flow time s (default 1)");
      exp.ns_opt = sub->add_option("--ns", exp.ns, "Comma-separated step counts")->delimiter(',');
    } else if (kind == "attainability") {
      exp.x_opt = sub->add_option("--x", exp.x, "Control index of X (default 0)");
      exp.t_opt = sub->add_option("--t", exp.t, "Final time t (default 1)");
      exp.eps_opt = sub->add_option("--eps", exp.eps, "Comma-separated descending epsilons")->delimiter(',');
      exp.grid_opt = sub->add_option("--grid", exp.grid, "Time grid points for M (at least 100)");
      sub->add_option("--initial", exp.initial, "Basis index of the initial state (default 0)");
    } else {
      exp.targets_opt = sub->add_option("--targets", exp.targets, "Number of random targets (default 5)");
      exp.segments_opt = sub->add_option("--segments", exp.budget.segments, "Segments per schedule (default 3)");
      exp.restarts_opt = sub->add_option("--restarts", exp.budget.restarts, "Random restarts (default 50)");
      exp.iterations_opt = sub->add_option("--iterations", exp.budget.iterations, "Descent sweeps per restart");
      sub->add_option("--initial", exp.initial, "Basis index of the initial state (default 0)");
    }
    kinds[kind] = sub;
  }

  std::string export_dir;
  CLI::App* presets = app.add_subcommand("presets", "List the built-in systems");
  presets->add_option("--export", export_dir, "Write every preset as DIR/NAME.sysconfig");
  add_format(presets, presets_c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      SystemConfig cfg = load_system(analyze_c);
      Verdict v = classify(cfg.system, cfg.caps, rep_override(analyze_c, cfg.system));
      emit_report(analyze_c, "report", verdict_report(cfg.system, v), verdict_text, out);
    } else if (closure->parsed()) {
      SystemConfig cfg = load_system(closure_c);
      const Caps& caps = cfg.caps;
      const auto gens = system_generators(cfg.system);
      if (caps.order_cap < cfg.system.order())
        throw ArgumentError("--cap " + std::to_string(caps.order_cap) + " is below the system order " +
                            std::to_string(cfg.system.order()));
      std::vector<std::pair<int, int>> growth;
      LieClosureResult last;
      for (int cap = std::max(1, cfg.system.order()); cap <= caps.order_cap; ++cap) {
        last = lie_closure(cfg.system.env, gens, caps.closure(cap));
        growth.emplace_back(cap, last.dim);
      }
      emit_report(closure_c, "closure", closure_report(cfg.system, last, growth), closure_text, out);
    } else if (coverage->parsed()) {
      SystemConfig cfg = load_system(coverage_c);
      const int cap = std::max(cfg.caps.order_cap, order);
      LieClosureResult c = lie_closure(cfg.system.env, system_generators(cfg.system), cfg.caps.closure(cap));
      std::vector<Coverage> cov;
      for (int n = order > 0 ? order : 1; n <= (order > 0 ? order : cap - 1); ++n)
        cov.push_back(pbw_coverage(cfg.system.env, c, n));
      emit_report(coverage_c, "coverage", coverage_report(cfg.system, cfg.system.env, c, cov), coverage_text, out);
    } else if (simulate->parsed()) {
      SystemConfig cfg = load_system(simulate_c);
      const ControlSystem& s = cfg.system;
      Representation rep = require_rep(simulate_c, s);
      ControlSchedule sched = read_schedule_csv(read_file(schedule_path), static_cast<int>(s.controls.size()));
      const StateVector psi0 = basis_state(rep.size(), sim_initial);
      const StateVector target = basis_state(rep.size(), sim_target < 0 ? sim_initial : sim_target);
      const StateVector psi = propagate(s, rep, sched, psi0);
      json r;
      r["tool"] = "liereach";
      r["version"] = kVersion;
      r["system"] = s.name;
      r["segments"] = sched.segments.size();
      r["total_duration"] = sched.total_duration();
      r["initial"] = sim_initial;
      r["target"] = sim_target < 0 ? sim_initial : sim_target;
      r["norm"] = psi.norm();
      r["fidelity"] = std::norm(target.dot(psi));
      r["final_state"] = state_json(psi);
      emit_report(simulate_c, "simulate", r, json_text, out);
    } else if (experiment->parsed()) {
      for (const auto& [kind, sub] : kinds)
        if (sub->parsed()) run_flow_experiment(kind, exp, out);
    } else if (presets->parsed()) {
      if (!export_dir.empty()) {
        std::filesystem::create_directories(export_dir);
        for (const auto& p : preset_list()) {
          const std::filesystem::path path = std::filesystem::path(export_dir) / (p.name + ".sysconfig");
          std::ofstream f(path, std::ios::binary);
          if (!f) throw std::runtime_error("cannot write " + path.string());
          f << config_to_json(preset_config(p.name)).dump(2) << "\n";
          out << "wrote " << path.string() << "\n";
        }
      } else if (presets_c.format == "json") {
        json list = json::array();
        for (const auto& p : preset_list()) list.push_back({{"name", p.name}, {"description", p.summary}});
        out << list.dump(2) << "\n";
      } else {
        for (const auto& p : preset_list()) out << p.name << "\t" << p.summary << "\n";
      }
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    err << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

}  // namespace liereach
