#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "liereach/envelope.hpp"

namespace liereach {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Truncated matrix realization of a symmetry algebra.
///
/// Each kind provides three standard component matrices:
///   su2-spin            Jx, Jy, Jz (dimension 2j+1, exact)
///   su11-discrete-plus  K0, K1, K2 on levels n = 0..K-1 of D_k^+ with k = j
///   heisenberg-fock     x, p, I on Fock levels 0..K-1
/// and `frame` expresses every algebra generator as a combination of the
/// components, which is how one kind serves several commutation tables.
/// `explicit` takes the generator matrices verbatim.
struct RepSpec {
  enum class Kind { Su2Spin, Su11DiscretePlus, HeisenbergFock, Explicit };
  using FrameEntry = std::vector<std::pair<int, Complex>>;

  Kind kind = Kind::Su2Spin;
  int two_j = 1;  // 2j: spin, or twice the lowest weight
  int K = 2;
  int margin = 2;
  std::vector<FrameEntry> frame;
  std::vector<ComplexMatrix> matrices;  // explicit kind only

  double j() const { return two_j / 2.0; }
  bool truncated() const { return kind == Kind::Su11DiscretePlus || kind == Kind::HeisenbergFock; }
};

std::string kind_name(RepSpec::Kind k);
/// Inverse of kind_name; throws ArgumentError on unknown names.
RepSpec::Kind kind_from_name(const std::string& name);

/// Identity frame: generator g is component g.
std::vector<RepSpec::FrameEntry> identity_frame(int d);

class Representation {
 public:
  /// Validates the spec against the algebra (frame size, K, spin dimension).
  Representation(const Envelope& env, RepSpec spec);

  const RepSpec& spec() const { return spec_; }
  const Envelope& envelope() const { return env_; }
  int size() const { return spec_.K; }

  const ComplexMatrix& gen_matrix(int g) const;
  ComplexMatrix env_to_matrix(const EnvElement& a) const;

  /// I + sum of squares of the non-central Hermitian generators.
  ComplexMatrix nelson_delta() const;
  /// sqrt(<phi, Delta^{k/2} phi>); odd k uses the spectral square root.
  double sobolev_norm(const StateVector& phi, int k) const;

  /// Highest level index a state may occupy before an order-n polynomial
  /// acts on it. K-1 for untruncated kinds.
  int interior_top(int n) const;
  bool in_interior(const StateVector& phi, int n, double tol = 1e-12) const;
  /// Column projector onto levels 0..top.
  ComplexMatrix interior_projector(int top) const;

 private:
  Envelope env_;
  RepSpec spec_;
  std::vector<ComplexMatrix> gens_;
};

/// The standard component matrices of a kind.
std::vector<ComplexMatrix> component_matrices(const RepSpec& spec);

struct HomomorphismReport {
  bool pass = true;
  double max_deviation = 0.0;
  int trials = 0;
};

/// Compares matrix(bracket(A, B)) with the matrix commutator over random
/// pairs of order <= n, on columns 0..interior_top(2n) (or all columns when
/// restrict_interior is false).
HomomorphismReport homomorphism_check(const Representation& rep, int n, int trials, std::uint64_t seed,
                                      bool restrict_interior = true, double tol = 1e-9);

/// Relative Frobenius deviation ||A - B|| / max(||B||, 1).
double relative_deviation(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace liereach
