#include "liereach/system.hpp"

#include "liereach/errors.hpp"

namespace liereach {

std::string manifold_name(Manifold m) { return m == Manifold::Orbit ? "orbit" : "sphere"; }

Manifold manifold_from_name(const std::string& name) {
  if (name == "orbit") return Manifold::Orbit;
  if (name == "sphere") return Manifold::Sphere;
  throw ArgumentError("unknown manifold: " + name);
}

void ControlSystem::validate() const {
  env.algebra().validate();
  auto check = [&](const EnvElement& h, const std::string& what) {
    if (h.algebra() != 0 && h.algebra() != env.id())
      throw ValidationError(name + ": " + what + " belongs to another algebra");
    if (!env.is_skew(h)) throw ValidationError(name + ": " + what + " is not skew-Hermitian: " + env.render(h));
  };
  check(h0, "H0");
  for (std::size_t j = 0; j < controls.size(); ++j) check(controls[j], "H" + std::to_string(j + 1));
}

int ControlSystem::order() const {
  int o = h0.order().value_or(0);
  for (const auto& h : controls) o = std::max(o, h.order().value_or(0));
  return o;
}

}  // namespace liereach
