#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "liereach/analysis.hpp"
#include "liereach/cli.hpp"
#include "liereach/config.hpp"
#include "liereach/dynamics.hpp"
#include "liereach/errors.hpp"
#include "liereach/presets.hpp"
#include "liereach/report.hpp"

namespace py = pybind11;
using namespace liereach;

namespace {

SystemConfig source(const std::string& preset_name, const std::string& config_path, const std::string& config_text) {
  const int given = !preset_name.empty() + !config_path.empty() + !config_text.empty();
  if (given != 1) throw ArgumentError("give exactly one of preset, config or config_text");
  if (!preset_name.empty()) return preset_config(preset_name);
  if (!config_path.empty()) return load_config(config_path);
  return parse_config(config_text);
}

SystemConfig with_caps(SystemConfig cfg, std::optional<int> cap, std::uint64_t seed, int threads) {
  if (cap) cfg.caps.order_cap = *cap;
  cfg.caps.seed = seed;
  cfg.caps.threads = threads;
  return cfg;
}

StructureAlgebra algebra_by_name(const std::string& name) {
  if (name == "su(1,1)-potential") return potential_su11();
  if (name == "su(1,1)-scattering") return scattering_su11();
  if (name == "su(2)") return su2();
  if (name == "h(1)") return heisenberg();
  throw ArgumentError("unknown algebra " + name);
}

Representation system_rep(const ControlSystem& s) {
  if (!s.rep) throw ArgumentError("system " + s.name + " has no representation");
  return Representation(s.env, *s.rep);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Lie-algebraic controllability analysis (C++ core)";
  m.attr("__version__") = kVersion;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def("presets", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : preset_list()) out.emplace_back(p.name, p.summary);
    return out;
  });

  m.def(
      "preset_config_json", [](const std::string& name) { return config_to_json(preset_config(name)).dump(2); },
      py::arg("name"));

  m.def(
      "normal_order",
      [](const std::string& algebra, const std::vector<int>& word) {
        Envelope env(algebra_by_name(algebra));
        return env.render(env.normal_order(word));
      },
      py::arg("algebra"), py::arg("word"), "PBW normal form of an ordered generator word, rendered canonically");

  m.def(
      "bracket",
      [](const std::string& algebra, const std::vector<std::uint16_t>& a, const std::vector<std::uint16_t>& b) {
        Envelope env(algebra_by_name(algebra));
        return env.render(env.bracket(env.monomial(a), env.monomial(b)));
      },
      py::arg("algebra"), py::arg("a"), py::arg("b"), "Commutator of two PBW monomials given by exponent vectors");

  m.def(
      "verify_jacobi",
      [](const std::string& config_text) {
        try {
          parse_config(config_text);
        } catch (const ValidationError& e) {
          return std::optional<std::string>(e.what());
        }
        return std::optional<std::string>();
      },
      py::arg("config_text"), "None when the config validates, else the validation message");

  m.def(
      "analyze",
      [](const std::string& preset, const std::string& config, const std::string& config_text,
         std::optional<int> cap, std::uint64_t seed, int threads) {
        SystemConfig cfg = with_caps(source(preset, config, config_text), cap, seed, threads);
        py::gil_scoped_release release;
        return verdict_report(cfg.system, classify(cfg.system, cfg.caps)).dump();
      },
      py::arg("preset") = "", py::arg("config") = "", py::arg("config_text") = "", py::arg("cap") = py::none(),
      py::arg("seed") = 42, py::arg("threads") = 1, "Report JSON of the controllability classification");

  m.def(
      "closure",
      [](const std::string& preset, const std::string& config, const std::string& config_text,
         std::optional<int> cap, int threads) {
        SystemConfig cfg = with_caps(source(preset, config, config_text), cap, 42, threads);
        py::gil_scoped_release release;
        LieClosureResult r = lie_closure(cfg.system.env, system_generators(cfg.system), cfg.caps.closure());
        return closure_report(cfg.system, r, {{cfg.caps.order_cap, r.dim}}).dump();
      },
      py::arg("preset") = "", py::arg("config") = "", py::arg("config_text") = "", py::arg("cap") = py::none(),
      py::arg("threads") = 1);

  m.def(
      "coverage",
      [](const std::string& preset, const std::string& config, const std::string& config_text, int order,
         std::optional<int> cap) {
        SystemConfig cfg = with_caps(source(preset, config, config_text), cap, 42, 1);
        const int c = std::max(cfg.caps.order_cap, order);
        LieClosureResult r = lie_closure(cfg.system.env, system_generators(cfg.system), cfg.caps.closure(c));
        return coverage_report(cfg.system, cfg.system.env, r, {pbw_coverage(cfg.system.env, r, order)}).dump();
      },
      py::arg("preset") = "", py::arg("config") = "", py::arg("config_text") = "", py::arg("order") = 3,
      py::arg("cap") = py::none());

  m.def(
      "hamiltonian_matrices",
      [](const std::string& preset, const std::string& config, const std::string& config_text) {
        SystemConfig cfg = source(preset, config, config_text);
        MatrixSystem ms = realize(cfg.system, system_rep(cfg.system));
        return std::make_pair(ms.h0, ms.controls);
      },
      py::arg("preset") = "", py::arg("config") = "", py::arg("config_text") = "",
      "(H0, [H1, ...]) as complex matrices in the system's representation");

  m.def(
      "propagate",
      [](const ComplexMatrix& h0, const std::vector<ComplexMatrix>& controls,
         const std::vector<std::pair<double, std::vector<double>>>& schedule, const StateVector& psi0) {
        ControlSchedule s;
        for (const auto& [d, u] : schedule) s.segments.push_back({d, u});
        return propagate(MatrixSystem{h0, controls}, s, psi0);
      },
      py::arg("h0"), py::arg("controls"), py::arg("schedule"), py::arg("psi0"));

  m.def("expm_skew", &expm_skew, py::arg("m"));

  m.def(
      "trotter_sum_error",
      [](const ComplexMatrix& x, const ComplexMatrix& y, double s, int n, std::uint64_t seed) {
        return trotter_sum_error(x, y, s, n, probe_states(static_cast<int>(x.rows()), static_cast<int>(x.rows()) - 1, seed));
      },
      py::arg("x"), py::arg("y"), py::arg("s"), py::arg("n"), py::arg("seed") = 42);

  m.def(
      "trotter_commutator_error",
      [](const ComplexMatrix& x, const ComplexMatrix& y, double s, int n, std::uint64_t seed) {
        return trotter_commutator_error(x, y, s, n,
                                        probe_states(static_cast<int>(x.rows()), static_cast<int>(x.rows()) - 1, seed));
      },
      py::arg("x"), py::arg("y"), py::arg("s"), py::arg("n"), py::arg("seed") = 42);

  m.def(
      "attainability",
      [](const ComplexMatrix& h0, const ComplexMatrix& x, double t, const std::vector<double>& eps,
         const StateVector& psi0, int grid_points) {
        FlowExperimentResult r = attainability_experiment(h0, x, t, eps, psi0, grid_points);
        py::list rows;
        for (const auto& row : r.rows) rows.append(py::make_tuple(row.param, row.error, row.bound));
        py::dict d;
        d["rows"] = rows;
        d["fitted_rate"] = r.fitted_rate;
        d["bound_ok"] = r.bound_ok;
        d["M"] = r.m_estimate;
        return d;
      },
      py::arg("h0"), py::arg("x"), py::arg("t"), py::arg("eps"), py::arg("psi0"), py::arg("grid_points") = 100);

  m.def(
      "reach_probe",
      [](const ComplexMatrix& h0, const std::vector<ComplexMatrix>& controls, const StateVector& psi0,
         const StateVector& target, int segments, int restarts, int iterations, std::uint64_t seed, int threads) {
        ReachBudget b;
        b.segments = segments;
        b.restarts = restarts;
        b.iterations = iterations;
        b.seed = seed;
        b.threads = threads;
        ReachResult r;
        {
          py::gil_scoped_release release;
          r = reach_probe(MatrixSystem{h0, controls}, psi0, target, b);
        }
        py::list sched;
        for (const auto& s : r.schedule.segments) sched.append(py::make_tuple(s.duration, s.u));
        py::dict d;
        d["fidelity"] = r.fidelity;
        d["schedule"] = sched;
        d["best_restart"] = r.best_restart;
        d["evaluations"] = r.evaluations;
        return d;
      },
      py::arg("h0"), py::arg("controls"), py::arg("psi0"), py::arg("target"), py::arg("segments") = 3,
      py::arg("restarts") = 50, py::arg("iterations") = 200, py::arg("seed") = 42, py::arg("threads") = 1);

  m.def(
      "run_command",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit code, stdout, stderr)");
}
