#include "liereach/presets.hpp"

#include "liereach/errors.hpp"

namespace liereach {

namespace {

using G = StructureAlgebra::Generator;

const GaussianRational kI = GaussianRational::i();

StructureAlgebra three_dim(const std::string& name, GaussianRational xy, GaussianRational yz, GaussianRational zx) {
  StructureAlgebra a(name, {G{"Lx"}, G{"Ly"}, G{"Lz"}});
  a.set_bracket(0, 1, {{2, xy}});
  a.set_bracket(1, 2, {{0, yz}});
  a.set_bracket(2, 0, {{1, zx}});
  return a;
}

RepSpec su11_rep(std::vector<RepSpec::FrameEntry> frame) {
  RepSpec r;
  r.kind = RepSpec::Kind::Su11DiscretePlus;
  r.two_j = 2;
  r.K = 40;
  r.margin = 2;
  r.frame = std::move(frame);
  return r;
}

// Component indices: su11 K0=0, K1=1, K2=2; su2 Jx=0, Jy=1, Jz=2.
RepSpec potential_rep() { return su11_rep({{{2, 1.0}}, {{1, 1.0}}, {{0, 1.0}}}); }
RepSpec scattering_rep() { return su11_rep({{{1, 1.0}}, {{0, 1.0}}, {{2, 1.0}}}); }

RepSpec spin_rep(int two_j) {
  RepSpec r;
  r.kind = RepSpec::Kind::Su2Spin;
  r.two_j = two_j;
  r.K = two_j + 1;
  r.margin = 0;
  r.frame = {{{0, 1.0}}, {{1, -1.0}}, {{2, 1.0}}};
  return r;
}

RepSpec fock_rep() {
  RepSpec r;
  r.kind = RepSpec::Kind::HeisenbergFock;
  r.K = 40;
  r.margin = 2;
  r.frame = identity_frame(3);
  return r;
}

/// -i times a Hermitian element: the skew form used by the control equation.
EnvElement skew(const EnvElement& hermitian) { return -kI * hermitian; }

ControlSystem make(const std::string& name, const std::string& description, const StructureAlgebra& alg) {
  return ControlSystem{name, description, Envelope(alg), EnvElement(alg.id()), {}, Manifold::Orbit, std::nullopt};
}

}  // namespace

StructureAlgebra potential_su11() { return three_dim("su(1,1)-potential", kI, -kI, -kI); }
StructureAlgebra scattering_su11() { return three_dim("su(1,1)-scattering", -kI, -kI, kI); }
StructureAlgebra su2() { return three_dim("su(2)", -kI, -kI, -kI); }

StructureAlgebra heisenberg() {
  StructureAlgebra a("h(1)", {G{"x"}, G{"p"}, G{"I", 1, true, true}});
  a.set_bracket(0, 1, {{2, kI}});
  return a;
}

std::optional<EnvElement> casimir(const Envelope& env) {
  const std::string& n = env.algebra().name();
  std::vector<long> signs;
  if (n == "su(1,1)-potential")
    signs = {1, 1, -1};
  else if (n == "su(1,1)-scattering")
    signs = {1, -1, 1};
  else if (n == "su(2)")
    signs = {1, 1, 1};
  else
    return std::nullopt;
  EnvElement c = env.zero();
  for (int g = 0; g < 3; ++g) {
    std::vector<std::uint16_t> e(3, 0);
    e[static_cast<std::size_t>(g)] = 2;
    c += env.monomial(e, signs[static_cast<std::size_t>(g)]);
  }
  return c;
}

const std::vector<PresetInfo>& preset_list() {
  static const std::vector<PresetInfo> list = {
      {"pt", "potential su(1,1): H0 = C + 1/4, controls Lx, Ly"},
      {"st", "scattering su(1,1): H0 = Lz^2, controls Lx, Ly"},
      {"st1", "scattering su(1,1): H0 = Lz^2, controls Lx, Ly, Lx^2"},
      {"bt", "bound-state su(2): H0 = -Lz^2, controls Lx, Ly"},
      {"lloyd", "h(1): H0 = x^2 + p^2, controls xp + px, p, x, (x^2 + p^2)^2"},
      {"qubit", "spin-1/2 su(2): H0 = Lz, control Lx"},
      {"qubit-homogeneous", "spin-1/2 su(2): H0 = 0, controls Lx, Ly"},
  };
  return list;
}

ControlSystem preset(const std::string& name) {
  if (name == "pt") {
    ControlSystem s = make(name, "Poschl-Teller potential model over the potential algebra, a = 1.", potential_su11());
    s.h0 = skew(*casimir(s.env) + s.env.unit(GaussianRational::from_parts(1, 4)));
    s.controls = {skew(s.env.generator(0)), skew(s.env.generator(1))};
    s.rep = potential_rep();
    return s;
  }
  if (name == "st" || name == "st1") {
    ControlSystem s = make(name, "Poschl-Teller scattering states over the scattering algebra, a = 1.",
                           scattering_su11());
    s.h0 = skew(s.env.monomial({0, 0, 2}));
    s.controls = {skew(s.env.generator(0)), skew(s.env.generator(1))};
    if (name == "st1") s.controls.push_back(skew(s.env.monomial({2, 0, 0})));
    s.rep = scattering_rep();
    return s;
  }
  if (name == "bt") {
    ControlSystem s = make(name,
                           "Poschl-Teller bound states over su(2), a = 1, with H0 = -Lz^2 as stated for the model. "
                           "The control equation is also written with +Lz^2; the two signs generate the same "
                           "Lie algebra.",
                           su2());
    s.h0 = skew(-s.env.monomial({0, 0, 2}));
    s.controls = {skew(s.env.generator(0)), skew(s.env.generator(1))};
    s.rep = spin_rep(4);
    return s;
  }
  if (name == "lloyd") {
    ControlSystem s = make(name, "Continuous-variable quantum computation over h(1), hbar = 1.", heisenberg());
    const Envelope& e = s.env;
    EnvElement x = e.generator(0), p = e.generator(1);
    EnvElement n = e.multiply(x, x) + e.multiply(p, p);
    s.h0 = skew(n);
    s.controls = {skew(e.multiply(x, p) + e.multiply(p, x)), skew(p), skew(x), skew(e.multiply(n, n))};
    s.rep = fock_rep();
    return s;
  }
  if (name == "qubit" || name == "qubit-homogeneous") {
    ControlSystem s = make(name, "Two-level benchmark with the spin-1/2 representation of su(2).", su2());
    if (name == "qubit") {
      s.h0 = skew(s.env.generator(2));
      s.controls = {skew(s.env.generator(0))};
    } else {
      s.controls = {skew(s.env.generator(0)), skew(s.env.generator(1))};
    }
    s.rep = spin_rep(1);
    return s;
  }
  throw ParseError("unknown preset: " + name);
}

RepSpec default_rep_for_algebra(const std::string& algebra_name) {
  if (algebra_name == "su(1,1)-potential") return potential_rep();
  if (algebra_name == "su(1,1)-scattering") return scattering_rep();
  if (algebra_name == "su(2)") return spin_rep(1);
  if (algebra_name == "h(1)") return fock_rep();
  throw ArgumentError("no default representation for algebra " + algebra_name);
}

}  // namespace liereach
