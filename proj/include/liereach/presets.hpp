#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liereach/system.hpp"

namespace liereach {

/// su(1,1) in the potential-algebra convention:
/// [Lx,Ly] = i Lz, [Ly,Lz] = -i Lx, [Lz,Lx] = -i Ly.
StructureAlgebra potential_su11();
/// su(1,1) in the scattering convention:
/// [Lx,Ly] = -i Lz, [Ly,Lz] = -i Lx, [Lz,Lx] = i Ly.
StructureAlgebra scattering_su11();
/// su(2) as realized by the Cartesian operators of the bound-state model:
/// [Lx,Ly] = -i Lz, [Ly,Lz] = -i Lx, [Lz,Lx] = -i Ly.
StructureAlgebra su2();
/// h(1) = {x, p, I} with [x,p] = i I; I is central and acts as the unit.
StructureAlgebra heisenberg();

/// Quadratic Casimir of the three su presets; empty for other algebras.
std::optional<EnvElement> casimir(const Envelope& env);

struct PresetInfo {
  std::string name;
  std::string summary;
};

const std::vector<PresetInfo>& preset_list();
/// Throws ParseError for unknown names.
ControlSystem preset(const std::string& name);

/// Default representation for an algebra preset name (used by configs that
/// name a standard algebra without giving a rep block).
RepSpec default_rep_for_algebra(const std::string& algebra_name);

}  // namespace liereach
