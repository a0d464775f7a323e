#include "liereach/analysis.hpp"

#include <Eigen/SVD>

#include "liereach/errors.hpp"
#include "liereach/random.hpp"

namespace liereach {

std::string classification_name(Classification c) {
  switch (c) {
    case Classification::FiniteDimControllable: return "FiniteDimControllable";
    case Classification::StronglyAnalyticallyControllable: return "StronglyAnalyticallyControllable";
    case Classification::ApproxStrongSmoothControllable: return "ApproxStrongSmoothControllable";
    case Classification::NoGoStrong: return "NoGoStrong";
    case Classification::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

int numerical_rank(const ComplexMatrix& m, double rel_tol) {
  if (m.cols() == 0 || m.rows() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

Eigen::VectorXd realify(const ComplexMatrix& m) {
  const Eigen::Index n = m.size();
  Eigen::VectorXd v(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(2 * i) = m.data()[i].real();
    v(2 * i + 1) = m.data()[i].imag();
  }
  return v;
}

int max_order(const std::vector<EnvElement>& elems) {
  int o = 0;
  for (const auto& e : elems) o = std::max(o, e.order().value_or(0));
  return o;
}

}  // namespace

int tangent_rank(const Representation& rep, const std::vector<EnvElement>& basis, const StateVector& phi, int order,
                 double rel_tol) {
  if (phi.size() != rep.size()) throw ArgumentError("tangent_rank: state dimension does not match the representation");
  for (const auto& x : basis)
    if (x.algebra() != 0 && x.algebra() != rep.envelope().id())
      throw ArgumentError("tangent_rank: basis element from another algebra");
  if (!rep.in_interior(phi, order)) throw PreconditionError("tangent_rank: state outside the truncation interior");
  if (basis.empty()) return 0;
  ComplexMatrix cols(rep.size(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    cols.col(static_cast<Eigen::Index>(i)) = rep.env_to_matrix(basis[i]) * phi;
  return numerical_rank(cols, rel_tol);
}

int matrix_closure_dim(const Representation& rep, const std::vector<EnvElement>& generators, double rel_tol) {
  std::vector<ComplexMatrix> mats;
  std::vector<Eigen::VectorXd> ortho;
  auto try_add = [&](const ComplexMatrix& m) {
    Eigen::VectorXd v = realify(m);
    const double n0 = v.norm();
    if (n0 == 0.0) return false;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : ortho) v -= q.dot(v) * q;
    if (v.norm() <= rel_tol * n0) return false;
    ortho.push_back(v / v.norm());
    mats.push_back(m / n0);
    return true;
  };
  for (const auto& g : generators) try_add(rep.env_to_matrix(g));
  std::size_t frontier = 0;
  while (frontier < mats.size()) {
    const std::size_t end = mats.size();
    for (std::size_t j = frontier; j < end; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        ComplexMatrix c = mats[i] * mats[j] - mats[j] * mats[i];
        try_add(c);
      }
    frontier = end;
  }
  return static_cast<int>(mats.size());
}

std::vector<EnvElement> system_generators(const ControlSystem& system) {
  std::vector<EnvElement> gens;
  if (!system.h0.is_zero()) gens.push_back(system.h0);
  for (const auto& h : system.controls)
    if (!h.is_zero()) gens.push_back(h);
  return gens;
}

namespace {

LieClosureResult closure_or_empty(const Envelope& env, const std::vector<EnvElement>& gens, const ClosureOptions& o) {
  if (gens.empty()) {
    LieClosureResult r;
    r.order_cap = o.order_cap;
    r.saturated = true;
    return r;
  }
  return lie_closure(env, gens, o);
}

std::string render_witness(const Envelope& env, const BcWitness& w) {
  return "[" + env.render(w.b) + ", " + env.render(w.c) + "] has residual " + env.render(w.residual);
}

}  // namespace

Verdict classify(const ControlSystem& system, const Caps& caps, const std::optional<RepSpec>& rep_override) {
  if (caps.order_cap <= 0 || caps.iter_cap <= 0) throw ArgumentError("classify: caps must be positive");
  if (system.order() > caps.order_cap)
    throw ArgumentError("classify: order cap " + std::to_string(caps.order_cap) + " is below the system order " +
                        std::to_string(system.order()));
  const Envelope& env = system.env;
  Verdict v;
  Evidence& ev = v.evidence;
  ev.caps = caps;

  const std::vector<EnvElement> gens = system_generators(system);
  const LieClosureResult a = closure_or_empty(env, gens, caps.closure());
  ev.dim_A = a.dim;
  ev.max_order = a.max_order;
  ev.saturated = a.saturated;
  ev.exact_A = a.exact_finite();
  ev.iter_cap_hit = a.iter_cap_hit;
  for (int cap = std::max(system.order(), 1); cap < caps.order_cap; ++cap)
    ev.growth.emplace_back(cap, closure_or_empty(env, gens, caps.closure(cap)).dim);
  ev.growth.emplace_back(caps.order_cap, a.dim);
  if (ev.growth.size() < 2 && a.truncated) {
    // Only one cap fits above the system order; probe one step further.
    ev.growth.emplace_back(caps.order_cap + 1, closure_or_empty(env, gens, caps.closure(caps.order_cap + 1)).dim);
    ev.notes.push_back("growth probed at cap " + std::to_string(caps.order_cap + 1));
  }
  for (int n = 1; n < caps.order_cap; ++n) ev.coverage.push_back(pbw_coverage(env, a, n));

  std::optional<RepSpec> spec = rep_override ? rep_override : system.rep;
  std::optional<Representation> rep;
  if (spec) rep.emplace(env, *spec);
  const bool finite_rep = rep && !rep->spec().truncated();

  // (a) finite-dimensional representation: rank criterion.
  if (finite_rep) {
    const int n = rep->size();
    ev.rep_dim = n;
    ev.rep_image_rank = matrix_closure_dim(*rep, gens);
    if (a.exact_finite() && (a.dim == n * n - 1 || a.dim == n * n)) {
      if (*ev.rep_image_rank == a.dim) {
        v.classification = Classification::FiniteDimControllable;
        ev.notes.push_back(std::string("controllability algebra is ") + (a.dim == n * n ? "u(" : "su(") +
                           std::to_string(n) + ") in the representation");
        return v;
      }
      ev.notes.push_back("symbolic dimension matches but the matrix image has rank " +
                         std::to_string(*ev.rep_image_rank));
    }
    if (a.exact_finite() && system.h0.is_zero() && a.dim < n * n - 1) {
      v.classification = Classification::Inconclusive;
      ev.failed_condition =
          "dim_A = " + std::to_string(a.dim) + " < N^2-1 = " + std::to_string(n * n - 1) + " for a homogeneous system";
      return v;
    }
  }

  // (b) finite-dimensional algebra on an infinite-dimensional sphere.
  if (a.exact_finite() && system.manifold == Manifold::Sphere && !finite_rep) {
    v.classification = Classification::NoGoStrong;
    ev.notes.push_back("finite-dimensional controllability algebra of dimension " + std::to_string(a.dim) +
                       " cannot act transitively on the unit sphere of an infinite-dimensional space");
    return v;
  }

  // (c) attainability conditions.
  const LieClosureResult b = closure_or_empty(env, system.controls, caps.closure());
  const LieClosureResult c = build_c(env, system.h0, b, caps.effective_k_max(), caps.closure());
  ev.dim_B = b.dim;
  ev.dim_C = c.dim;
  BcCheck bc = check_bc_in_b(env, b, c, caps.order_cap);
  ev.condition_bc = bc.holds;
  if (!bc.holds) {
    ev.bc_witness = render_witness(env, *bc.witness);
    v.classification = Classification::Inconclusive;
    ev.failed_condition = "[B,C] is not contained in B";
    return v;
  }

  if (rep) {
    const int order = std::max({max_order(a.basis), max_order(c.basis), 1});
    const int top = rep->interior_top(order);
    if (top < 0) throw PreconditionError("classify: representation too small for order " + std::to_string(order));
    std::vector<std::pair<std::string, StateVector>> states;
    StateVector e0 = StateVector::Zero(rep->size());
    e0(0) = 1.0;
    states.emplace_back("basis0", e0);
    Rng rng(caps.seed);
    for (int s = 1; s <= 2; ++s) states.emplace_back("random" + std::to_string(s), rng.state(rep->size(), top));
    bool equal = true;
    for (const auto& [label, phi] : states) {
      // The state itself is appended so that directions parallel to phi
      // (global phase) are counted once on both sides.
      std::vector<EnvElement> cb = c.basis, ab = a.basis;
      cb.push_back(env.unit());
      ab.push_back(env.unit());
      TangentSample t{label, tangent_rank(*rep, cb, phi, order), tangent_rank(*rep, ab, phi, order)};
      equal = equal && t.rank_C == t.rank_A;
      ev.tangent.push_back(t);
    }
    ev.tangent_equal = equal;
    if (!equal) {
      v.classification = Classification::Inconclusive;
      ev.failed_condition = "C(phi) != A(phi) at a sampled state";
      return v;
    }
  } else {
    ev.notes.push_back("no representation given; tangent condition not evaluated");
  }

  if (a.exact_finite()) {
    v.classification = Classification::StronglyAnalyticallyControllable;
    return v;
  }
  const bool growing = ev.growth.size() >= 2 && ev.growth.back().second > ev.growth[ev.growth.size() - 2].second;
  if (a.truncated && growing) {
    v.classification = Classification::ApproxStrongSmoothControllable;
    ev.notes.push_back("infinite dimensionality of A and C is supported by growth of dim_A with the cap, not proven");
    return v;
  }
  v.classification = Classification::Inconclusive;
  ev.failed_condition = a.iter_cap_hit ? "closure did not saturate within iter_cap" : "dim_A does not grow with the cap";
  return v;
}

}  // namespace liereach
