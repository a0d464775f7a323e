#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liereach/envelope.hpp"
#include "liereach/representation.hpp"

namespace liereach {

/// Manifold the reachability question is posed on. `Orbit` is the orbit of
/// the controllability group through the initial state; `Sphere` is the
/// whole unit sphere of an infinite-dimensional Hilbert space, on which a
/// finite-dimensional controllability algebra rules out strong control.
enum class Manifold { Orbit, Sphere };

std::string manifold_name(Manifold m);
Manifold manifold_from_name(const std::string& name);

/// d/dt psi = (H0 + sum_j u_j H_j) psi with skew Hamiltonians in E(L).
struct ControlSystem {
  std::string name;
  std::string description;
  Envelope env;
  EnvElement h0;
  std::vector<EnvElement> controls;
  Manifold manifold = Manifold::Orbit;
  std::optional<RepSpec> rep;

  /// Algebra validation plus skewness of every Hamiltonian; throws
  /// ValidationError naming the offender.
  void validate() const;
  int order() const;
};

}  // namespace liereach
