#include "liereach/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "liereach/errors.hpp"
#include "liereach/random.hpp"

namespace liereach {

ComplexMatrix expm_skew(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw ArgumentError("expm_skew: matrix must be square");
  const double norm = m.norm();
  if ((m + m.adjoint()).norm() > 1e-10 * norm) throw PreconditionError("expm_skew: matrix is not skew-Hermitian");
  if (norm == 0.0) return ComplexMatrix::Identity(m.rows(), m.cols());
  ComplexMatrix h = Complex(0.0, 1.0) * m;
  h = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  Eigen::VectorXcd phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) phases(i) = std::exp(Complex(0.0, -es.eigenvalues()(i)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double ControlSchedule::total_duration() const {
  double t = 0.0;
  for (const auto& s : segments) t += s.duration;
  return t;
}

MatrixSystem realize(const ControlSystem& system, const Representation& rep) {
  auto image = [&](const EnvElement& h, const std::string& what) {
    ComplexMatrix m = rep.env_to_matrix(h);
    if ((m + m.adjoint()).norm() > 1e-10 * std::max(m.norm(), 1.0))
      throw PreconditionError(what + " is not skew in the representation");
    return m;
  };
  MatrixSystem out;
  out.h0 = image(system.h0, "H0");
  for (std::size_t j = 0; j < system.controls.size(); ++j)
    out.controls.push_back(image(system.controls[j], "H" + std::to_string(j + 1)));
  return out;
}

namespace {

ComplexMatrix segment_generator(const MatrixSystem& sys, const Segment& seg) {
  if (seg.u.size() != sys.controls.size())
    throw ArgumentError("schedule segment has " + std::to_string(seg.u.size()) + " amplitudes, system has " +
                        std::to_string(sys.controls.size()) + " controls");
  if (!(seg.duration > 0.0)) throw ArgumentError("schedule durations must be positive");
  ComplexMatrix g = sys.h0;
  for (std::size_t j = 0; j < seg.u.size(); ++j) g += seg.u[j] * sys.controls[j];
  return seg.duration * g;
}

}  // namespace

StateVector propagate(const MatrixSystem& sys, const ControlSchedule& sched, const StateVector& psi0) {
  if (sched.segments.empty()) throw ArgumentError("propagate: empty schedule");
  if (psi0.size() != sys.size()) throw ArgumentError("propagate: state dimension does not match the system");
  StateVector psi = psi0;
  for (const auto& seg : sched.segments) psi = expm_skew(segment_generator(sys, seg)) * psi;
  return psi;
}

StateVector propagate(const ControlSystem& system, const Representation& rep, const ControlSchedule& sched,
                      const StateVector& psi0) {
  if (psi0.size() != rep.size()) throw ArgumentError("propagate: state dimension does not match the representation");
  if (!rep.in_interior(psi0, system.order()))
    throw PreconditionError("propagate: initial state outside the truncation interior");
  return propagate(realize(system, rep), sched, psi0);
}

std::vector<StateVector> probe_states(int size, int top, std::uint64_t seed, int randoms) {
  std::vector<StateVector> out;
  StateVector e0 = StateVector::Zero(size);
  e0(0) = 1.0;
  out.push_back(e0);
  Rng rng(seed);
  for (int r = 0; r < randoms; ++r) out.push_back(rng.state(size, top));
  return out;
}

namespace {

void check_pair(const ComplexMatrix& x, const ComplexMatrix& y, int n) {
  if (n < 1) throw ArgumentError("product formula: n must be >= 1");
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw ArgumentError("product formula: size mismatch");
}

double max_error(const ComplexMatrix& exact, const ComplexMatrix& step, int n, const std::vector<StateVector>& probes) {
  double err = 0.0;
  for (const auto& phi : probes) {
    StateVector approx = phi;
    for (int k = 0; k < n; ++k) approx = step * approx;
    err = std::max(err, (exact * phi - approx).norm());
  }
  return err;
}

}  // namespace

double trotter_sum_error(const ComplexMatrix& x, const ComplexMatrix& y, double s, int n,
                         const std::vector<StateVector>& probes) {
  check_pair(x, y, n);
  ComplexMatrix exact = expm_skew(s * (x + y));
  ComplexMatrix step = expm_skew((s / n) * x) * expm_skew((s / n) * y);
  return max_error(exact, step, n, probes);
}

double trotter_commutator_error(const ComplexMatrix& x, const ComplexMatrix& y, double s, int n,
                                const std::vector<StateVector>& probes) {
  check_pair(x, y, n);
  if (s < 0.0) throw ArgumentError("trotter_commutator_error: s must be >= 0");
  const double a = std::sqrt(s / n);
  ComplexMatrix exact = expm_skew(s * (x * y - y * x));
  ComplexMatrix step = expm_skew(a * x) * expm_skew(a * y) * expm_skew(-a * x) * expm_skew(-a * y);
  return max_error(exact, step, n, probes);
}

double loglog_slope(const std::vector<ExperimentRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int k = 0;
  for (const auto& r : rows) {
    if (!(r.param > 0.0) || !(r.error > 0.0)) continue;
    const double lx = std::log(r.param), ly = std::log(r.error);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++k;
  }
  if (k < 2) return std::numeric_limits<double>::quiet_NaN();
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

FlowExperimentResult trotter_sum_curve(const ComplexMatrix& x, const ComplexMatrix& y, double s,
                                       const std::vector<int>& ns, const std::vector<StateVector>& probes) {
  FlowExperimentResult r;
  for (int n : ns)
    r.rows.push_back({static_cast<double>(n), trotter_sum_error(x, y, s, n, probes),
                      std::numeric_limits<double>::quiet_NaN()});
  std::sort(r.rows.begin(), r.rows.end(), [](const auto& a, const auto& b) { return a.param < b.param; });
  r.fitted_rate = loglog_slope(r.rows);
  return r;
}

FlowExperimentResult trotter_commutator_curve(const ComplexMatrix& x, const ComplexMatrix& y, double s,
                                              const std::vector<int>& ns, const std::vector<StateVector>& probes) {
  FlowExperimentResult r;
  for (int n : ns)
    r.rows.push_back({static_cast<double>(n), trotter_commutator_error(x, y, s, n, probes),
                      std::numeric_limits<double>::quiet_NaN()});
  std::sort(r.rows.begin(), r.rows.end(), [](const auto& a, const auto& b) { return a.param < b.param; });
  r.fitted_rate = loglog_slope(r.rows);
  r.notes.push_back("rate measured, no theoretical exponent asserted");
  return r;
}

FlowExperimentResult attainability_experiment(const ComplexMatrix& h0, const ComplexMatrix& x, double t,
                                              const std::vector<double>& eps_list, const StateVector& psi0,
                                              int grid_points) {
  if (!(t > 0.0)) throw ArgumentError("attainability_experiment: t must be positive");
  if (grid_points < 100) throw ArgumentError("attainability_experiment: grid needs at least 100 points");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (eps_list[i] < 0.0) throw ArgumentError("attainability_experiment: epsilon must be nonnegative");
    if (i > 0 && eps_list[i] > eps_list[i - 1]) throw ArgumentError("attainability_experiment: epsilon must descend");
  }
  FlowExperimentResult r;
  for (int g = 0; g <= grid_points; ++g) {
    const double s = t * g / grid_points;
    r.m_estimate = std::max(r.m_estimate, (h0 * (expm_skew(s * x) * psi0)).norm());
  }
  const StateVector free_flow = expm_skew(t * x) * psi0;
  for (double eps : eps_list) {
    const double dev = (expm_skew(t * (eps * h0 + x)) * psi0 - free_flow).norm();
    const double bound = eps * r.m_estimate * t;
    if (dev > bound * (1 + 1e-6)) r.bound_ok = false;
    r.rows.push_back({eps, dev, bound});
  }
  std::sort(r.rows.begin(), r.rows.end(), [](const auto& a, const auto& b) { return a.param < b.param; });
  r.fitted_rate = loglog_slope(r.rows);
  r.notes.push_back("M estimated on " + std::to_string(grid_points + 1) + " grid points");
  return r;
}

namespace {

double fidelity(const MatrixSystem& sys, const std::vector<double>& p, int segments, const StateVector& psi0,
                const StateVector& target) {
  const std::size_t m = sys.controls.size();
  StateVector psi = psi0;
  for (int k = 0; k < segments; ++k) {
    const std::size_t base = static_cast<std::size_t>(k) * (m + 1);
    ComplexMatrix g = sys.h0;
    for (std::size_t j = 0; j < m; ++j) g += p[base + 1 + j] * sys.controls[j];
    psi = expm_skew(p[base] * g) * psi;
  }
  return std::norm(target.dot(psi));
}

struct RestartOutcome {
  double fidelity = -1.0;
  std::vector<double> params;
  int evaluations = 0;
};

RestartOutcome run_restart(const MatrixSystem& sys, const StateVector& psi0, const StateVector& target,
                           const ReachBudget& b, int restart) {
  const std::size_t m = sys.controls.size();
  const std::size_t per = m + 1;
  Rng rng(b.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(restart + 1));
  std::vector<double> p(per * static_cast<std::size_t>(b.segments));
  std::vector<double> lo(p.size()), hi(p.size()), step(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const bool duration = i % per == 0;
    lo[i] = duration ? 1e-6 : -b.max_amplitude;
    hi[i] = duration ? b.max_duration : b.max_amplitude;
    p[i] = duration ? rng.uniform(0.05, 1.0) * b.max_duration : rng.uniform(lo[i], hi[i]);
    step[i] = (hi[i] - lo[i]) / 8.0;
  }
  RestartOutcome out;
  double f = fidelity(sys, p, b.segments, psi0, target);
  out.evaluations = 1;
  for (int it = 0; it < b.iterations && f < b.stop_fidelity; ++it) {
    bool improved = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (double dir : {1.0, -1.0}) {
        const double old = p[i];
        p[i] = std::clamp(old + dir * step[i], lo[i], hi[i]);
        if (p[i] == old) continue;
        const double g = fidelity(sys, p, b.segments, psi0, target);
        ++out.evaluations;
        if (g > f) {
          f = g;
          improved = true;
          break;
        }
        p[i] = old;
      }
    }
    if (!improved) {
      bool tiny = true;
      for (std::size_t i = 0; i < step.size(); ++i) {
        step[i] *= 0.5;
        tiny = tiny && step[i] < 1e-12 * (hi[i] - lo[i]);
      }
      if (tiny) break;
    }
  }
  out.fidelity = f;
  out.params = std::move(p);
  return out;
}

}  // namespace

ReachResult reach_probe(const MatrixSystem& sys, const StateVector& psi0, const StateVector& target,
                        const ReachBudget& budget) {
  if (budget.segments <= 0 || budget.restarts <= 0 || budget.iterations <= 0)
    throw ArgumentError("reach_probe: budget must allow at least one segment, restart and iteration");
  if (!(budget.max_duration > 0.0) || budget.max_amplitude < 0.0)
    throw ArgumentError("reach_probe: invalid duration or amplitude bound");
  if (target.size() != sys.size() || psi0.size() != sys.size())
    throw ArgumentError("reach_probe: state dimension does not match the system");
  if (std::abs(target.norm() - 1.0) > 1e-9) throw ArgumentError("reach_probe: target must be a unit vector");

  ReachResult res;
  res.fidelity = std::norm(target.dot(psi0));
  if (res.fidelity >= budget.stop_fidelity) return res;

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(budget.restarts));
  auto work = [&](int first, int stride) {
    for (int r = first; r < budget.restarts; r += stride)
      outcomes[static_cast<std::size_t>(r)] = run_restart(sys, psi0, target, budget, r);
  };
  const int threads = std::clamp(budget.threads, 1, budget.restarts);
  std::vector<std::thread> pool;
  for (int w = 1; w < threads; ++w) pool.emplace_back(work, w, threads);
  work(0, threads);
  for (auto& t : pool) t.join();

  const std::size_t per = sys.controls.size() + 1;
  for (int r = 0; r < budget.restarts; ++r) {
    const auto& o = outcomes[static_cast<std::size_t>(r)];
    res.evaluations += o.evaluations;
    if (o.fidelity > res.fidelity) {
      res.fidelity = o.fidelity;
      res.best_restart = r;
      res.schedule.segments.clear();
      for (int k = 0; k < budget.segments; ++k) {
        Segment s;
        s.duration = o.params[static_cast<std::size_t>(k) * per];
        for (std::size_t j = 1; j < per; ++j) s.u.push_back(o.params[static_cast<std::size_t>(k) * per + j]);
        res.schedule.segments.push_back(std::move(s));
      }
    }
  }
  return res;
}

}  // namespace liereach
