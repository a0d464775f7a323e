#include "liereach/config.hpp"

#include <fstream>
#include <sstream>

#include "liereach/errors.hpp"
#include "liereach/presets.hpp"

namespace liereach {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError("config field '" + field + "': " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

template <typename T>
T get_as(const json& v, const std::string& path) {
  try {
    return v.get<T>();
  } catch (const json::exception& e) {
    fail(path, e.what());
  }
}

mpq_class parse_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return mpq_class(get_as<long>(v, path));
  if (v.is_string()) {
    try {
      mpq_class q(get_as<std::string>(v, path));
      q.canonicalize();
      if (q.get_den() == 0) fail(path, "zero denominator");
      return q;
    } catch (const std::invalid_argument&) {
      fail(path, "not a rational");
    }
  }
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    fail(path, "expected [numerator, denominator]");
  const long num = get_as<long>(v[0], path), den = get_as<long>(v[1], path);
  if (den == 0) fail(path, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

json rational_json(const mpq_class& q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) return json::array({q.get_num().get_si(), q.get_den().get_si()});
  return q.get_str();
}

GaussianRational parse_gr(const json& re, const json& im, const std::string& path) {
  return GaussianRational(parse_rational(re, path + ".re"), parse_rational(im, path + ".im"));
}

StructureAlgebra parse_algebra(const json& j) {
  const std::string path = "algebra";
  if (!j.is_object()) fail(path, "expected an object");
  if (j.contains("preset")) {
    const std::string name = get_as<std::string>(j["preset"], path + ".preset");
    if (name == "su(1,1)-potential") return potential_su11();
    if (name == "su(1,1)-scattering") return scattering_su11();
    if (name == "su(2)") return su2();
    if (name == "h(1)") return heisenberg();
    fail(path + ".preset", "unknown algebra " + name);
  }
  const std::string name = get_as<std::string>(require(j, "name", path), path + ".name");
  const json& gens = require(j, "generators", path);
  if (!gens.is_array() || gens.empty()) fail(path + ".generators", "expected a non-empty array");
  std::vector<StructureAlgebra::Generator> list;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string gp = path + ".generators[" + std::to_string(i) + "]";
    const json& g = gens[i];
    StructureAlgebra::Generator gen;
    gen.label = get_as<std::string>(require(g, "label", gp), gp + ".label");
    gen.hermitian = g.contains("hermitian") ? get_as<int>(g["hermitian"], gp + ".hermitian") : 1;
    gen.central = g.contains("central") ? get_as<bool>(g["central"], gp + ".central") : false;
    gen.identity = g.contains("identity") ? get_as<bool>(g["identity"], gp + ".identity") : false;
    if (gen.hermitian != 1 && gen.hermitian != -1) fail(gp + ".hermitian", "must be 1 or -1");
    list.push_back(gen);
  }
  StructureAlgebra alg(name, list);
  const int d = alg.dim();
  std::map<std::pair<int, int>, std::map<int, GaussianRational>> cells;
  if (j.contains("brackets")) {
    const json& br = j["brackets"];
    if (!br.is_object()) fail(path + ".brackets", "expected an object keyed by \"i,j\"");
    for (const auto& [key, entries] : br.items()) {
      const std::string bp = path + ".brackets[" + key + "]";
      int a = -1, b = -1;
      char comma = 0;
      std::istringstream is(key);
      if (!(is >> a >> comma >> b) || comma != ',' || !is.eof() || a < 0 || b < 0 || a >= d || b >= d)
        fail(bp, "key must be \"i,j\" with valid generator indices");
      if (!entries.is_array()) fail(bp, "expected a list of [k, re, im]");
      std::map<int, GaussianRational> cell;
      for (std::size_t t = 0; t < entries.size(); ++t) {
        const std::string ep = bp + "[" + std::to_string(t) + "]";
        const json& e = entries[t];
        if (!e.is_array() || e.size() != 3) fail(ep, "expected [k, re, im]");
        const int k = get_as<int>(e[0], ep + ".k");
        if (k < 0 || k >= d) fail(ep + ".k", "generator index out of range");
        cell[k] += parse_gr(e[1], e[2], ep);
      }
      cells[{a, b}] = cell;
    }
  }
  // A pair listed only once is completed antisymmetrically; listing both
  // orders stores both verbatim so inconsistent tables are caught.
  for (const auto& [ij, cell] : cells) {
    alg.set_bracket_raw(ij.first, ij.second, cell);
    if (!cells.count({ij.second, ij.first})) {
      std::map<int, GaussianRational> neg;
      for (const auto& [k, c] : cell) neg[k] = -c;
      alg.set_bracket_raw(ij.second, ij.first, neg);
    }
  }
  return alg;
}

EnvElement parse_poly(const Envelope& env, const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list of [exponents, re, im] terms");
  EnvElement out = env.zero();
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tp = path + "[" + std::to_string(t) + "]";
    const json& term = j[t];
    if (!term.is_array() || term.size() != 3) fail(tp, "expected [exponents, re, im]");
    if (!term[0].is_array() || static_cast<int>(term[0].size()) != env.dim())
      fail(tp + ".exponents", "expected " + std::to_string(env.dim()) + " exponents");
    std::vector<std::uint16_t> exps;
    for (const auto& e : term[0]) {
      const int v = get_as<int>(e, tp + ".exponents");
      if (v < 0 || v > 64) fail(tp + ".exponents", "exponent out of range");
      exps.push_back(static_cast<std::uint16_t>(v));
    }
    out += env.monomial(exps, parse_gr(term[1], term[2], tp));
  }
  return out;
}

json poly_json(const EnvElement& a) {
  json out = json::array();
  for (const auto& [m, c] : a.terms())
    out.push_back(json::array({m.exponents(), rational_json(c.re()), rational_json(c.im())}));
  return out;
}

RepSpec parse_rep(const json& j, int d) {
  const std::string path = "rep";
  RepSpec r;
  try {
    r.kind = kind_from_name(get_as<std::string>(require(j, "kind", path), path + ".kind"));
  } catch (const ArgumentError& e) {
    fail(path + ".kind", e.what());
  }
  if (j.contains("j")) {
    mpq_class twice = 2 * parse_rational(j["j"], path + ".j");
    if (twice.get_den() != 1 || sgn(twice) < 0) fail(path + ".j", "must be a nonnegative half-integer");
    r.two_j = static_cast<int>(twice.get_num().get_si());
  }
  r.K = get_as<int>(require(j, "K", path), path + ".K");
  if (r.K < 2) fail(path + ".K", "must be >= 2");
  if (j.contains("margin")) r.margin = get_as<int>(j["margin"], path + ".margin");
  if (j.contains("frame")) {
    const json& f = j["frame"];
    if (!f.is_array() || static_cast<int>(f.size()) != d) fail(path + ".frame", "expected one entry per generator");
    for (std::size_t g = 0; g < f.size(); ++g) {
      const std::string fp = path + ".frame[" + std::to_string(g) + "]";
      if (!f[g].is_array()) fail(fp, "expected a list of [component, re, im]");
      RepSpec::FrameEntry entry;
      for (const auto& c : f[g]) {
        if (!c.is_array() || c.size() != 3) fail(fp, "expected [component, re, im]");
        entry.emplace_back(get_as<int>(c[0], fp), Complex(get_as<double>(c[1], fp), get_as<double>(c[2], fp)));
      }
      r.frame.push_back(std::move(entry));
    }
  }
  if (r.kind == RepSpec::Kind::Explicit) {
    const json& ms = require(j, "matrices", path);
    if (!ms.is_array()) fail(path + ".matrices", "expected one matrix per generator");
    for (std::size_t g = 0; g < ms.size(); ++g) {
      const std::string mp = path + ".matrices[" + std::to_string(g) + "]";
      const json& rows = ms[g];
      if (!rows.is_array() || static_cast<int>(rows.size()) != r.K) fail(mp, "expected K rows");
      ComplexMatrix m(r.K, r.K);
      for (int a = 0; a < r.K; ++a) {
        const json& row = rows[static_cast<std::size_t>(a)];
        if (!row.is_array() || static_cast<int>(row.size()) != r.K) fail(mp, "expected K entries per row");
        for (int b = 0; b < r.K; ++b) {
          const json& e = row[static_cast<std::size_t>(b)];
          if (!e.is_array() || e.size() != 2) fail(mp, "entries are [re, im]");
          m(a, b) = Complex(get_as<double>(e[0], mp), get_as<double>(e[1], mp));
        }
      }
      r.matrices.push_back(std::move(m));
    }
  }
  return r;
}

json rep_json(const RepSpec& r) {
  json j;
  j["kind"] = kind_name(r.kind);
  j["j"] = json::array({r.two_j, 2});
  if (r.two_j % 2 == 0) j["j"] = json::array({r.two_j / 2, 1});
  j["K"] = r.K;
  j["margin"] = r.margin;
  json frame = json::array();
  for (const auto& entry : r.frame) {
    json e = json::array();
    for (const auto& [c, coef] : entry) e.push_back(json::array({c, coef.real(), coef.imag()}));
    frame.push_back(e);
  }
  j["frame"] = frame;
  if (r.kind == RepSpec::Kind::Explicit) {
    json ms = json::array();
    for (const auto& m : r.matrices) {
      json rows = json::array();
      for (int a = 0; a < m.rows(); ++a) {
        json row = json::array();
        for (int b = 0; b < m.cols(); ++b) row.push_back(json::array({m(a, b).real(), m(a, b).imag()}));
        rows.push_back(row);
      }
      ms.push_back(rows);
    }
    j["matrices"] = ms;
  }
  return j;
}

}  // namespace

SystemConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("", "top level must be an object");
  const int version = get_as<int>(require(root, "schema_version", ""), "schema_version");
  if (version != 1) fail("schema_version", "unsupported version " + std::to_string(version));

  StructureAlgebra alg = parse_algebra(require(root, "algebra", ""));
  alg.validate();
  Envelope env(alg);
  SystemConfig cfg{ControlSystem{"", "", env, env.zero(), {}, Manifold::Orbit, std::nullopt}, Caps{}};
  ControlSystem& s = cfg.system;
  s.name = get_as<std::string>(require(root, "name", ""), "name");
  s.description = root.contains("description") ? get_as<std::string>(root["description"], "description") : "";

  std::string convention = "skew";
  if (root.contains("hamiltonian_convention"))
    convention = get_as<std::string>(root["hamiltonian_convention"], "hamiltonian_convention");
  if (convention != "skew" && convention != "hermitian")
    fail("hamiltonian_convention", "must be \"skew\" or \"hermitian\"");
  auto convert = [&](EnvElement e) {
    return convention == "hermitian" ? -GaussianRational::i() * e : e;
  };
  s.h0 = root.contains("h0") ? convert(parse_poly(s.env, root["h0"], "h0")) : s.env.zero();
  if (root.contains("controls")) {
    const json& cs = root["controls"];
    if (!cs.is_array()) fail("controls", "expected a list of polynomials");
    for (std::size_t k = 0; k < cs.size(); ++k)
      s.controls.push_back(convert(parse_poly(s.env, cs[k], "controls[" + std::to_string(k) + "]")));
  }
  if (root.contains("manifold")) {
    try {
      s.manifold = manifold_from_name(get_as<std::string>(root["manifold"], "manifold"));
    } catch (const ArgumentError& e) {
      fail("manifold", e.what());
    }
  }
  if (root.contains("rep")) {
    s.rep = parse_rep(root["rep"], alg.dim());
    try {
      Representation check(s.env, *s.rep);
    } catch (const ArgumentError& e) {
      fail("rep", e.what());
    }
  }
  if (root.contains("caps")) {
    const json& c = root["caps"];
    if (!c.is_object()) fail("caps", "expected an object");
    if (c.contains("order_cap")) cfg.caps.order_cap = get_as<int>(c["order_cap"], "caps.order_cap");
    if (c.contains("iter_cap")) cfg.caps.iter_cap = get_as<int>(c["iter_cap"], "caps.iter_cap");
    if (c.contains("k_max")) cfg.caps.k_max = get_as<int>(c["k_max"], "caps.k_max");
    if (cfg.caps.order_cap <= 0) fail("caps.order_cap", "must be positive");
    if (cfg.caps.iter_cap <= 0) fail("caps.iter_cap", "must be positive");
  }
  if (root.contains("experiments")) {
    if (!root["experiments"].is_array()) fail("experiments", "expected a list");
    cfg.experiments = root["experiments"];
  }
  s.validate();
  return cfg;
}

RepSpec parse_rep_spec(const json& j, int dim) {
  if (!j.is_object()) fail("rep", "expected an object");
  return parse_rep(j, dim);
}

json rep_spec_to_json(const RepSpec& r) { return rep_json(r); }

SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

json config_to_json(const SystemConfig& cfg) {
  const ControlSystem& s = cfg.system;
  const StructureAlgebra& a = s.env.algebra();
  json root;
  root["schema_version"] = 1;
  root["name"] = s.name;
  root["description"] = s.description;
  json alg;
  alg["name"] = a.name();
  json gens = json::array();
  for (const auto& g : a.generators())
    gens.push_back({{"label", g.label}, {"hermitian", g.hermitian}, {"central", g.central}, {"identity", g.identity}});
  alg["generators"] = gens;
  json br = json::object();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      AlgebraElement c = a.bracket_gen(i, j);
      if (c.is_zero()) continue;
      json entries = json::array();
      for (const auto& [k, v] : c.coords())
        entries.push_back(json::array({k, rational_json(v.re()), rational_json(v.im())}));
      br[std::to_string(i) + "," + std::to_string(j)] = entries;
    }
  alg["brackets"] = br;
  root["algebra"] = alg;
  root["hamiltonian_convention"] = "skew";
  root["h0"] = poly_json(s.h0);
  json cs = json::array();
  for (const auto& h : s.controls) cs.push_back(poly_json(h));
  root["controls"] = cs;
  root["manifold"] = manifold_name(s.manifold);
  if (s.rep) root["rep"] = rep_json(*s.rep);
  root["caps"] = {{"order_cap", cfg.caps.order_cap}, {"iter_cap", cfg.caps.iter_cap}, {"k_max", cfg.caps.k_max}};
  root["experiments"] = cfg.experiments;
  return root;
}

SystemConfig preset_config(const std::string& name) {
  SystemConfig cfg{preset(name), Caps{}};
  cfg.caps.order_cap = std::max(4, cfg.system.order());
  return cfg;
}

}  // namespace liereach
