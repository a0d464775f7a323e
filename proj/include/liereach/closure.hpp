#pragma once

#include <map>
#include <optional>
#include <vector>

#include "liereach/envelope.hpp"

namespace liereach {

/// Exact reduced row-echelon basis of a subspace of E(L). Rows are keyed by
/// their pivot (leading monomial in graded-lex order), have pivot
/// coefficient 1, and vanish at every other row's pivot, so the form is
/// canonical for the subspace.
class EchelonSpace {
 public:
  /// Residual of v after elimination against the rows; zero iff v is in the span.
  EnvElement reduce(const EnvElement& v) const;
  bool contains(const EnvElement& v) const { return reduce(v).is_zero(); }
  /// Adds v if independent; returns whether the dimension grew.
  bool insert(const EnvElement& v);

  std::size_t dim() const { return rows_.size(); }
  std::vector<EnvElement> rows() const;
  /// Largest pivot order, empty when the space is zero.
  std::optional<int> max_order() const;

 private:
  std::map<Monomial, EnvElement, LeadingFirst> rows_;
};

struct ClosureOptions {
  int order_cap = 4;
  int iter_cap = 64;
  /// Worker threads for evaluating one pass of brackets. Reduction is always
  /// sequential in pair order, so the result does not depend on this.
  int threads = 1;
};

struct LieClosureResult {
  std::vector<EnvElement> basis;  // canonical echelon rows
  EchelonSpace space;
  int dim = 0;
  std::optional<int> max_order;
  bool saturated = false;
  bool iter_cap_hit = false;
  /// Some bracket had terms above the cap that were dropped. A saturated
  /// closure without truncation is an exact finite-dimensional Lie algebra.
  bool truncated = false;
  int order_cap = 0;
  int iterations = 0;

  bool exact_finite() const { return saturated && !truncated; }
};

/// Smallest bracket-closed subspace of E^(cap) containing the truncated
/// generators, brackets truncated at the cap. Pairs are processed in
/// (older, newer) order and new elements appended, so the output is a
/// deterministic function of the input.
LieClosureResult lie_closure(const Envelope& env, const std::vector<EnvElement>& generators,
                             const ClosureOptions& opts);

/// Closure of {ad_{H0}^k b : b in B, 0 <= k <= k_max}. A negative k_max
/// means "use the order cap".
LieClosureResult build_c(const Envelope& env, const EnvElement& h0, const LieClosureResult& b, int k_max,
                         const ClosureOptions& opts);

struct BcWitness {
  EnvElement b;
  EnvElement c;
  EnvElement residual;  // part of [b, c] outside span(B)
};

struct BcCheck {
  bool holds = true;
  std::optional<BcWitness> witness;
  int pairs_checked = 0;
};

/// Decides [B, C] in B exactly (brackets truncated at order_cap).
BcCheck check_bc_in_b(const Envelope& env, const LieClosureResult& b, const LieClosureResult& c, int order_cap);

struct Coverage {
  int n = 0;
  int covered = 0;
  int total = 0;
  std::vector<Monomial> missing;

  double fraction() const { return total == 0 ? 1.0 : static_cast<double>(covered) / total; }
  bool full() const { return covered == total; }
};

/// Dimension of span(result) intersected with the span of PBW monomials of
/// order 1..n, against the number of such monomials. The unit monomial is
/// excluded. Identity generators do not contribute monomials.
Coverage pbw_coverage(const Envelope& env, const LieClosureResult& result, int n);

/// All PBW monomials of order 1..n, in leading-first order.
std::vector<Monomial> monomials_up_to(const Envelope& env, int n);

}  // namespace liereach
