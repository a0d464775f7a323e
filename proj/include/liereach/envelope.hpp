#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liereach/gaussian_rational.hpp"
#include "liereach/structure_algebra.hpp"

namespace liereach {

/// PBW monomial L_1^a_1 ... L_d^a_d relative to the algebra's declaration
/// order. The all-zero exponent vector is the unit.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint16_t> exponents);
  static Monomial unit(int d) { return Monomial(std::vector<std::uint16_t>(static_cast<std::size_t>(d), 0)); }
  static Monomial generator(int d, int i);

  const std::vector<std::uint16_t>& exponents() const { return exps_; }
  int order() const { return order_; }
  bool is_unit() const { return order_ == 0; }
  /// Generator indices in PBW order, each repeated by its exponent.
  std::vector<int> word() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

 private:
  std::vector<std::uint16_t> exps_;
  int order_ = 0;
};

/// Graded lexicographic order, largest first. Maps keyed with this iterate
/// from the leading monomial down, which is also the echelon pivot order.
struct LeadingFirst {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.order() != b.order()) return a.order() > b.order();
    return b < a;
  }
};

/// Element of the enveloping algebra: PBW monomial -> exact coefficient.
class EnvElement {
 public:
  using Terms = std::map<Monomial, GaussianRational, LeadingFirst>;

  EnvElement() = default;
  explicit EnvElement(std::uint64_t algebra) : algebra_(algebra) {}

  std::uint64_t algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Largest term order; empty for the zero element.
  std::optional<int> order() const;
  const Monomial& leading() const;
  GaussianRational coef(const Monomial& m) const;

  void add(const Monomial& m, const GaussianRational& c);
  /// this += s * o
  void add_scaled(const EnvElement& o, const GaussianRational& s);

  EnvElement& operator+=(const EnvElement& o);
  EnvElement& operator-=(const EnvElement& o);
  EnvElement& operator*=(const GaussianRational& s);
  friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
  friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
  friend EnvElement operator*(const GaussianRational& s, EnvElement a) { return a *= s; }
  EnvElement operator-() const { return GaussianRational(-1) * *this; }
  friend bool operator==(const EnvElement& a, const EnvElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const EnvElement& a, const EnvElement& b) { return !(a == b); }

 private:
  void check_same(const EnvElement& o) const;

  std::uint64_t algebra_ = 0;
  Terms terms_;
};

/// Drops every term of order > n.
EnvElement grade_truncate(const EnvElement& a, int n);

/// Exact universal enveloping algebra of a StructureAlgebra.
///
/// Products are brought to PBW normal form by adjacent-transposition
/// rewriting: an out-of-order pair L_b L_a (b after a) becomes
/// L_a L_b + [L_b, L_a], and the correction has strictly lower order, so
/// the rewriting terminates. Normal forms of words are memoized; the cache
/// is shared between copies and is safe for concurrent use.
class Envelope {
 public:
  explicit Envelope(StructureAlgebra algebra);

  const StructureAlgebra& algebra() const { return algebra_; }
  int dim() const { return algebra_.dim(); }
  std::uint64_t id() const { return algebra_.id(); }

  EnvElement zero() const { return EnvElement(id()); }
  EnvElement unit(GaussianRational c = 1) const;
  EnvElement generator(int i, GaussianRational c = 1) const;
  /// Monomial with the given exponents; identity generators fold into the unit.
  EnvElement monomial(std::vector<std::uint16_t> exponents, GaussianRational c = 1) const;
  EnvElement embed(const AlgebraElement& x) const;

  /// PBW normal form of the ordered product L_w1 ... L_wn.
  EnvElement normal_order(std::span<const int> word) const;
  EnvElement multiply(const EnvElement& a, const EnvElement& b) const;
  EnvElement power(const EnvElement& a, int k) const;
  /// a*b - b*a
  EnvElement bracket(const EnvElement& a, const EnvElement& b) const;
  /// Antilinear anti-automorphism extended from the generator flags.
  EnvElement adjoint(const EnvElement& a) const;
  bool is_skew(const EnvElement& a) const;

  /// Canonical text: "(2i)*Ly^1Lz^1 + (-1)*Lx^1"; the unit monomial is "1".
  std::string render(const EnvElement& a) const;
  std::string render(const Monomial& m) const;

  /// Number of cached normal forms (diagnostics and cache tests).
  std::size_t cache_size() const;
  void clear_cache() const;

 private:
  struct Cache;

  void check(const EnvElement& a) const;
  EnvElement normal_order_impl(std::vector<int> word) const;
  EnvElement monomial_product(const Monomial& a, const Monomial& b) const;

  StructureAlgebra algebra_;
  std::vector<bool> identity_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace liereach
