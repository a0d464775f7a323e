#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liereach/closure.hpp"
#include "liereach/representation.hpp"
#include "liereach/system.hpp"

namespace liereach {

struct Caps {
  int order_cap = 4;
  int iter_cap = 64;
  int k_max = -1;  // negative: same as order_cap
  int threads = 1;
  std::uint64_t seed = 42;

  ClosureOptions closure(int cap) const { return {cap, iter_cap, threads}; }
  ClosureOptions closure() const { return closure(order_cap); }
  int effective_k_max() const { return k_max < 0 ? order_cap : k_max; }
};

/// Complex rank of the matrix whose columns are X*phi for X in basis, with
/// singular values below rel_tol * (largest singular value) treated as zero.
/// `order` is the polynomial order the interior check is made for.
int tangent_rank(const Representation& rep, const std::vector<EnvElement>& basis, const StateVector& phi, int order,
                 double rel_tol = 1e-9);

/// Real dimension of the matrix Lie algebra generated by the images of the
/// given skew elements (numerical closure, tolerance rel_tol).
int matrix_closure_dim(const Representation& rep, const std::vector<EnvElement>& generators, double rel_tol = 1e-9);

enum class Classification {
  FiniteDimControllable,
  StronglyAnalyticallyControllable,
  ApproxStrongSmoothControllable,
  NoGoStrong,
  Inconclusive
};

std::string classification_name(Classification c);

struct TangentSample {
  std::string state;  // "basis0", "random1", ...
  int rank_C = 0;
  int rank_A = 0;
};

struct Evidence {
  Caps caps;
  int dim_A = 0;
  int dim_B = 0;
  int dim_C = 0;
  std::optional<int> max_order;
  bool saturated = false;
  bool exact_A = false;
  bool iter_cap_hit = false;
  /// dim_A at each cap from the system order up to the cap (one cap further
  /// when the system order equals the cap).
  std::vector<std::pair<int, int>> growth;
  std::vector<Coverage> coverage;
  std::optional<bool> condition_bc;
  std::optional<std::string> bc_witness;
  std::vector<TangentSample> tangent;
  std::optional<bool> tangent_equal;
  std::optional<int> rep_dim;
  std::optional<int> rep_image_rank;
  std::string failed_condition;
  std::vector<std::string> notes;
};

struct Verdict {
  Classification classification = Classification::Inconclusive;
  Evidence evidence;
};

/// The decision procedure. `rep` overrides the system's own representation.
Verdict classify(const ControlSystem& system, const Caps& caps, const std::optional<RepSpec>& rep = std::nullopt);

/// Generators of the controllability algebra: H0 (when nonzero) then controls.
std::vector<EnvElement> system_generators(const ControlSystem& system);

}  // namespace liereach
