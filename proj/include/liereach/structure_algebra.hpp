#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liereach/gaussian_rational.hpp"

namespace liereach {

/// Sparse element of a finite-dimensional Lie algebra: generator index ->
/// coefficient. Zero coefficients are never stored.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(std::uint64_t algebra) : algebra_(algebra) {}

  static AlgebraElement generator(std::uint64_t algebra, int index, GaussianRational coef = 1);

  std::uint64_t algebra() const { return algebra_; }
  const std::map<int, GaussianRational>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  GaussianRational coef(int index) const;

  void add(int index, const GaussianRational& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const GaussianRational& s);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const GaussianRational& s, AlgebraElement a) { return a *= s; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.coords_ == b.coords_; }

 private:
  void check_same(const AlgebraElement& o) const;

  std::uint64_t algebra_ = 0;
  std::map<int, GaussianRational> coords_;
};

struct JacobiWitness {
  int i, j, k;
  AlgebraElement violation;
};

struct AntisymmetryWitness {
  int i, j;
};

/// Finite-dimensional Lie algebra given by exact structure constants
/// [L_i, L_j] = sum_k c[i][j][k] L_k.
///
/// A generator flagged `identity` must also be central and Hermitian; the
/// enveloping algebra identifies it with the unit (so E becomes the quotient
/// by "1 - 1"). This is how h(1) realizes [x,p] = i with a genuine scalar.
class StructureAlgebra {
 public:
  struct Generator {
    std::string label;
    int hermitian = 1;  // +1 Hermitian, -1 skew-Hermitian under the involution
    bool central = false;
    bool identity = false;
  };

  StructureAlgebra() = default;
  /// Builds without validating; call validate() (or the loaders, which do)
  /// before trusting the result.
  StructureAlgebra(std::string name, std::vector<Generator> generators);

  /// Sets c[i][j] as given and c[j][i] to its negative.
  void set_bracket(int i, int j, const std::map<int, GaussianRational>& coefs);
  /// Sets only c[i][j]; used for raw loading and for negative controls.
  void set_bracket_raw(int i, int j, const std::map<int, GaussianRational>& coefs);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int i) const;
  const std::vector<Generator>& generators() const { return gens_; }
  std::optional<int> index_of(const std::string& label) const;

  /// Structural fingerprint; elements remember it so mixing algebras is caught.
  std::uint64_t id() const { return id_; }

  AlgebraElement zero() const { return AlgebraElement(id_); }
  AlgebraElement generator(int i, GaussianRational coef = 1) const;

  /// Stored bracket of two generators.
  AlgebraElement bracket_gen(int i, int j) const;
  /// Bilinear extension of bracket_gen.
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;
  /// Conjugate-linear involution built from the per-generator flags.
  AlgebraElement adjoint(const AlgebraElement& x) const;

  std::optional<AntisymmetryWitness> verify_antisymmetry() const;
  std::optional<JacobiWitness> verify_jacobi() const;
  /// Central generators must bracket to zero; returns the offending pair.
  std::optional<std::pair<int, int>> verify_central() const;
  /// Runs every check above and throws ValidationError naming the witness.
  void validate() const;

  /// Algebra of the rescaled generators s*L_i (same labels). With s = i this
  /// turns Hermitian generators into skew-Hermitian ones.
  StructureAlgebra rescaled(const GaussianRational& s) const;

 private:
  void check_index(int i) const;
  void refresh_id();

  std::string name_;
  std::vector<Generator> gens_;
  std::vector<std::vector<std::map<int, GaussianRational>>> table_;
  std::uint64_t id_ = 0;
};

}  // namespace liereach
