#include "liereach/representation.hpp"

#include <cmath>

#include "liereach/errors.hpp"
#include "liereach/random.hpp"

namespace liereach {

std::string kind_name(RepSpec::Kind k) {
  switch (k) {
    case RepSpec::Kind::Su2Spin: return "su2-spin";
    case RepSpec::Kind::Su11DiscretePlus: return "su11-discrete-plus";
    case RepSpec::Kind::HeisenbergFock: return "heisenberg-fock";
    case RepSpec::Kind::Explicit: return "explicit";
  }
  return "?";
}

RepSpec::Kind kind_from_name(const std::string& name) {
  for (auto k : {RepSpec::Kind::Su2Spin, RepSpec::Kind::Su11DiscretePlus, RepSpec::Kind::HeisenbergFock,
                 RepSpec::Kind::Explicit})
    if (kind_name(k) == name) return k;
  throw ArgumentError("unknown representation kind: " + name);
}

std::vector<RepSpec::FrameEntry> identity_frame(int d) {
  std::vector<RepSpec::FrameEntry> f;
  for (int g = 0; g < d; ++g) f.push_back({{g, Complex(1.0, 0.0)}});
  return f;
}

std::vector<ComplexMatrix> component_matrices(const RepSpec& spec) {
  const int n = spec.K;
  const Complex I(0.0, 1.0);
  switch (spec.kind) {
    case RepSpec::Kind::Su2Spin: {
      // Basis ordered m = j, j-1, ..., -j.
      const double j = spec.j();
      ComplexMatrix jz = ComplexMatrix::Zero(n, n), jp = ComplexMatrix::Zero(n, n);
      for (int r = 0; r < n; ++r) {
        const double m = j - r;
        jz(r, r) = m;
        if (r > 0) jp(r - 1, r) = std::sqrt((j - m) * (j + m + 1));
      }
      ComplexMatrix jm = jp.adjoint();
      return {(jp + jm) / 2.0, (jp - jm) / (2.0 * I), jz};
    }
    case RepSpec::Kind::Su11DiscretePlus: {
      const double k = spec.j();
      ComplexMatrix k0 = ComplexMatrix::Zero(n, n), kp = ComplexMatrix::Zero(n, n);
      for (int l = 0; l < n; ++l) {
        k0(l, l) = k + l;
        if (l + 1 < n) kp(l + 1, l) = std::sqrt((l + 1.0) * (l + 2.0 * k));
      }
      ComplexMatrix km = kp.adjoint();
      return {k0, (kp + km) / 2.0, (kp - km) / (2.0 * I)};
    }
    case RepSpec::Kind::HeisenbergFock: {
      ComplexMatrix a = ComplexMatrix::Zero(n, n);
      for (int l = 1; l < n; ++l) a(l - 1, l) = std::sqrt(static_cast<double>(l));
      ComplexMatrix ad = a.adjoint();
      const double s = std::sqrt(2.0);
      return {(a + ad) / s, I * (ad - a) / s, ComplexMatrix::Identity(n, n)};
    }
    case RepSpec::Kind::Explicit: return spec.matrices;
  }
  return {};
}

Representation::Representation(const Envelope& env, RepSpec spec) : env_(env), spec_(std::move(spec)) {
  const int d = env_.dim();
  if (spec_.K < 2) throw ArgumentError("representation: K must be >= 2");
  if (spec_.margin < 0) throw ArgumentError("representation: margin must be >= 0");
  if (spec_.kind == RepSpec::Kind::Su2Spin && (spec_.two_j < 1 || spec_.K != spec_.two_j + 1))
    throw ArgumentError("representation: su2-spin requires K = 2j+1");
  if (spec_.kind == RepSpec::Kind::Su11DiscretePlus && spec_.two_j < 1)
    throw ArgumentError("representation: su11-discrete-plus requires j >= 1/2");

  std::vector<ComplexMatrix> comps = component_matrices(spec_);
  if (spec_.kind == RepSpec::Kind::Explicit) {
    if (static_cast<int>(comps.size()) != d)
      throw ArgumentError("representation: explicit kind needs one matrix per generator");
    for (const auto& m : comps)
      if (m.rows() != spec_.K || m.cols() != spec_.K)
        throw ArgumentError("representation: explicit matrix has wrong size");
    spec_.frame = identity_frame(d);
    gens_ = std::move(comps);
    return;
  }
  if (spec_.frame.empty()) spec_.frame = identity_frame(d);
  if (static_cast<int>(spec_.frame.size()) != d)
    throw ArgumentError("representation: frame must list every generator of " + env_.algebra().name());
  for (const auto& entry : spec_.frame) {
    ComplexMatrix m = ComplexMatrix::Zero(spec_.K, spec_.K);
    for (const auto& [c, coef] : entry) {
      if (c < 0 || c >= static_cast<int>(comps.size()))
        throw ArgumentError("representation: frame component out of range");
      m += coef * comps[static_cast<std::size_t>(c)];
    }
    gens_.push_back(std::move(m));
  }
}

const ComplexMatrix& Representation::gen_matrix(int g) const {
  if (g < 0 || g >= static_cast<int>(gens_.size())) throw ArgumentError("gen_matrix: unknown generator");
  return gens_[static_cast<std::size_t>(g)];
}

ComplexMatrix Representation::env_to_matrix(const EnvElement& a) const {
  if (a.algebra() != 0 && a.algebra() != env_.id()) throw ArgumentError("env_to_matrix: element of another algebra");
  const int n = spec_.K;
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const auto& [m, c] : a.terms()) {
    ComplexMatrix prod = ComplexMatrix::Identity(n, n);
    for (int g : m.word()) prod = prod * gens_[static_cast<std::size_t>(g)];
    out += c.to_complex() * prod;
  }
  return out;
}

ComplexMatrix Representation::nelson_delta() const {
  const int n = spec_.K;
  ComplexMatrix delta = ComplexMatrix::Identity(n, n);
  for (int g = 0; g < env_.dim(); ++g) {
    const auto& gen = env_.algebra().gen(g);
    if (gen.central || gen.hermitian != 1) continue;
    delta += gens_[static_cast<std::size_t>(g)] * gens_[static_cast<std::size_t>(g)];
  }
  return delta;
}

double Representation::sobolev_norm(const StateVector& phi, int k) const {
  if (k < 0) throw ArgumentError("sobolev_norm: k must be >= 0");
  if (phi.size() != spec_.K) throw ArgumentError("sobolev_norm: state has wrong dimension");
  if (k == 0) return phi.norm();
  ComplexMatrix delta = nelson_delta();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (delta + delta.adjoint()));
  StateVector coords = es.eigenvectors().adjoint() * phi;
  double s = 0.0;
  for (int i = 0; i < coords.size(); ++i)
    s += std::norm(coords(i)) * std::pow(std::max(es.eigenvalues()(i), 0.0), k / 2.0);
  return std::sqrt(s);
}

int Representation::interior_top(int n) const {
  if (!spec_.truncated()) return spec_.K - 1;
  return spec_.K - 1 - n - spec_.margin;
}

bool Representation::in_interior(const StateVector& phi, int n, double tol) const {
  const int top = interior_top(n);
  if (top < 0) return false;
  for (int i = top + 1; i < phi.size(); ++i)
    if (std::abs(phi(i)) > tol) return false;
  return true;
}

ComplexMatrix Representation::interior_projector(int top) const {
  if (top < 0) throw PreconditionError("interior_projector: truncation leaves no interior levels");
  ComplexMatrix p = ComplexMatrix::Zero(spec_.K, top + 1);
  for (int i = 0; i <= top; ++i) p(i, i) = 1.0;
  return p;
}

double relative_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).norm() / std::max(b.norm(), 1.0);
}

namespace {

EnvElement random_element(const Envelope& env, int n, Rng& rng) {
  EnvElement e = env.zero();
  const int terms = rng.integer(1, 4);
  for (int t = 0; t < terms; ++t) {
    const int len = rng.integer(1, n);
    std::vector<int> word;
    for (int l = 0; l < len; ++l) word.push_back(rng.integer(0, env.dim() - 1));
    GaussianRational c(rng.integer(-3, 3), rng.integer(-3, 3));
    if (c.is_zero()) c = 1;
    e.add_scaled(env.normal_order(word), c);
  }
  return e;
}

}  // namespace

HomomorphismReport homomorphism_check(const Representation& rep, int n, int trials, std::uint64_t seed,
                                      bool restrict_interior, double tol) {
  if (n < 1 || trials < 1) throw ArgumentError("homomorphism_check: n and trials must be positive");
  const Envelope& env = rep.envelope();
  Rng rng(seed);
  HomomorphismReport report;
  const int top = restrict_interior ? rep.interior_top(2 * n) : rep.size() - 1;
  ComplexMatrix proj = rep.interior_projector(top);
  for (int t = 0; t < trials; ++t) {
    EnvElement a = random_element(env, n, rng), b = random_element(env, n, rng);
    ComplexMatrix ma = rep.env_to_matrix(a), mb = rep.env_to_matrix(b);
    ComplexMatrix lhs = rep.env_to_matrix(env.bracket(a, b)) * proj;
    ComplexMatrix rhs = (ma * mb - mb * ma) * proj;
    report.max_deviation = std::max(report.max_deviation, relative_deviation(lhs, rhs));
    ++report.trials;
  }
  report.pass = report.max_deviation < tol;
  return report;
}

}  // namespace liereach
