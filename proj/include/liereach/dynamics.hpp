#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liereach/representation.hpp"
#include "liereach/system.hpp"

namespace liereach {

/// exp(M) for skew-Hermitian M, via the eigendecomposition of iM. Throws
/// PreconditionError when ||M + M^dagger|| > 1e-10 * ||M||.
ComplexMatrix expm_skew(const ComplexMatrix& m);

struct Segment {
  double duration = 0.0;
  std::vector<double> u;
};

/// Piecewise-constant controls, applied in list order.
struct ControlSchedule {
  std::vector<Segment> segments;
  double total_duration() const;
};

/// A control system with its Hamiltonians realized as matrices.
struct MatrixSystem {
  ComplexMatrix h0;
  std::vector<ComplexMatrix> controls;

  int size() const { return static_cast<int>(h0.rows()); }
};

/// Realizes every Hamiltonian in the representation; throws
/// PreconditionError if an image is not skew.
MatrixSystem realize(const ControlSystem& system, const Representation& rep);

/// psi(T) = prod over segments of exp(duration * (H0 + sum_j u_j H_j)) psi0,
/// the first segment acting first.
StateVector propagate(const MatrixSystem& sys, const ControlSchedule& sched, const StateVector& psi0);
/// Same, after checking psi0 lies in the interior for the system's order.
StateVector propagate(const ControlSystem& system, const Representation& rep, const ControlSchedule& sched,
                      const StateVector& psi0);

/// First basis state followed by `randoms` seeded random unit states on
/// levels 0..top.
std::vector<StateVector> probe_states(int size, int top, std::uint64_t seed, int randoms = 2);

/// max over probes of ||exp(s(X+Y)) phi - (exp(sX/n) exp(sY/n))^n phi||.
double trotter_sum_error(const ComplexMatrix& x, const ComplexMatrix& y, double s, int n,
                         const std::vector<StateVector>& probes);
/// max over probes of ||exp(s[X,Y]) phi - (e^{aX} e^{aY} e^{-aX} e^{-aY})^n phi||, a = sqrt(s/n).
double trotter_commutator_error(const ComplexMatrix& x, const ComplexMatrix& y, double s, int n,
                                const std::vector<StateVector>& probes);

struct ExperimentRow {
  double param = 0.0;
  double error = 0.0;
  double bound = 0.0;  // NaN where no bound applies
};

struct FlowExperimentResult {
  std::vector<ExperimentRow> rows;
  double fitted_rate = 0.0;  // log-log slope of error against param
  bool bound_ok = true;
  double m_estimate = 0.0;
  std::vector<std::string> notes;
};

/// Least-squares slope of log(error) against log(param) over rows with
/// positive entries; NaN with fewer than two usable rows.
double loglog_slope(const std::vector<ExperimentRow>& rows);

FlowExperimentResult trotter_sum_curve(const ComplexMatrix& x, const ComplexMatrix& y, double s,
                                       const std::vector<int>& ns, const std::vector<StateVector>& probes);
FlowExperimentResult trotter_commutator_curve(const ComplexMatrix& x, const ComplexMatrix& y, double s,
                                              const std::vector<int>& ns, const std::vector<StateVector>& probes);

/// dev(eps) = ||exp(t(eps H0 + X)) psi0 - exp(tX) psi0|| against eps*M*t,
/// M = max over a uniform grid of s in [0,t] of ||H0 exp(sX) psi0||.
FlowExperimentResult attainability_experiment(const ComplexMatrix& h0, const ComplexMatrix& x, double t,
                                              const std::vector<double>& eps_list, const StateVector& psi0,
                                              int grid_points = 100);

struct ReachBudget {
  int segments = 3;
  int restarts = 50;
  int iterations = 200;
  double max_duration = 6.283185307179586;
  double max_amplitude = 4.0;
  double stop_fidelity = 1.0 - 1e-10;
  std::uint64_t seed = 42;
  int threads = 1;
};

struct ReachResult {
  double fidelity = 0.0;
  ControlSchedule schedule;
  int best_restart = -1;
  int evaluations = 0;
};

/// Random restarts plus coordinate descent over durations and amplitudes,
/// maximizing |<target, psi(T)>|^2. Deterministic for a fixed budget.
ReachResult reach_probe(const MatrixSystem& sys, const StateVector& psi0, const StateVector& target,
                        const ReachBudget& budget);

}  // namespace liereach
