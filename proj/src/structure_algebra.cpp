#include "liereach/structure_algebra.hpp"

#include <sstream>

#include "liereach/errors.hpp"

namespace liereach {

AlgebraElement AlgebraElement::generator(std::uint64_t algebra, int index, GaussianRational coef) {
  AlgebraElement e(algebra);
  e.add(index, coef);
  return e;
}

GaussianRational AlgebraElement::coef(int index) const {
  auto it = coords_.find(index);
  return it == coords_.end() ? GaussianRational{} : it->second;
}

void AlgebraElement::add(int index, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(index, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coords_.erase(it);
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (algebra_ != 0 && o.algebra_ != 0 && algebra_ != o.algebra_)
    throw ArgumentError("AlgebraElement: elements belong to different algebras");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same(o);
  if (algebra_ == 0) algebra_ = o.algebra_;
  for (const auto& [k, c] : o.coords_) add(k, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same(o);
  if (algebra_ == 0) algebra_ = o.algebra_;
  for (const auto& [k, c] : o.coords_) add(k, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    coords_.clear();
    return *this;
  }
  for (auto& [k, c] : coords_) c *= s;
  return *this;
}

StructureAlgebra::StructureAlgebra(std::string name, std::vector<Generator> generators)
    : name_(std::move(name)), gens_(std::move(generators)) {
  if (gens_.empty()) throw ArgumentError("StructureAlgebra: needs at least one generator");
  for (const auto& g : gens_)
    if (g.hermitian != 1 && g.hermitian != -1)
      throw ArgumentError("StructureAlgebra: hermitian flag must be +1 or -1 for " + g.label);
  table_.assign(gens_.size(), std::vector<std::map<int, GaussianRational>>(gens_.size()));
  refresh_id();
}

void StructureAlgebra::check_index(int i) const {
  if (i < 0 || i >= dim())
    throw ArgumentError("generator index " + std::to_string(i) + " out of range for algebra " + name_);
}

const StructureAlgebra::Generator& StructureAlgebra::gen(int i) const {
  check_index(i);
  return gens_[static_cast<std::size_t>(i)];
}

std::optional<int> StructureAlgebra::index_of(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (gens_[static_cast<std::size_t>(i)].label == label) return i;
  return std::nullopt;
}

void StructureAlgebra::set_bracket_raw(int i, int j, const std::map<int, GaussianRational>& coefs) {
  check_index(i);
  check_index(j);
  auto& cell = table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  cell.clear();
  for (const auto& [k, c] : coefs) {
    check_index(k);
    if (!c.is_zero()) cell[k] = c;
  }
  refresh_id();
}

void StructureAlgebra::set_bracket(int i, int j, const std::map<int, GaussianRational>& coefs) {
  std::map<int, GaussianRational> neg;
  for (const auto& [k, c] : coefs) neg[k] = -c;
  set_bracket_raw(i, j, coefs);
  set_bracket_raw(j, i, neg);
}

AlgebraElement StructureAlgebra::generator(int i, GaussianRational coef) const {
  check_index(i);
  return AlgebraElement::generator(id_, i, std::move(coef));
}

AlgebraElement StructureAlgebra::bracket_gen(int i, int j) const {
  check_index(i);
  check_index(j);
  AlgebraElement out(id_);
  for (const auto& [k, c] : table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) out.add(k, c);
  return out;
}

AlgebraElement StructureAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  for (const auto* e : {&x, &y})
    if (e->algebra() != 0 && e->algebra() != id_)
      throw ArgumentError("bracket: element does not belong to algebra " + name_);
  AlgebraElement out(id_);
  for (const auto& [i, a] : x.coords()) {
    for (const auto& [j, b] : y.coords()) {
      GaussianRational ab = a * b;
      for (const auto& [k, c] : table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) out.add(k, ab * c);
    }
  }
  return out;
}

AlgebraElement StructureAlgebra::adjoint(const AlgebraElement& x) const {
  AlgebraElement out(id_);
  for (const auto& [i, c] : x.coords()) {
    GaussianRational cc = c.conj();
    if (gen(i).hermitian < 0) cc = -cc;
    out.add(i, cc);
  }
  return out;
}

std::optional<AntisymmetryWitness> StructureAlgebra::verify_antisymmetry() const {
  for (int i = 0; i < dim(); ++i) {
    for (int j = i; j < dim(); ++j) {
      AlgebraElement s = bracket_gen(i, j) + bracket_gen(j, i);
      if (!s.is_zero()) return AntisymmetryWitness{i, j};
    }
  }
  return std::nullopt;
}

std::optional<JacobiWitness> StructureAlgebra::verify_jacobi() const {
  const int d = dim();
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        AlgebraElement li = generator(i), lj = generator(j), lk = generator(k);
        AlgebraElement sum = bracket(li, bracket_gen(j, k));
        sum += bracket(lj, bracket_gen(k, i));
        sum += bracket(lk, bracket_gen(i, j));
        if (!sum.is_zero()) return JacobiWitness{i, j, k, sum};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> StructureAlgebra::verify_central() const {
  for (int i = 0; i < dim(); ++i) {
    if (!gens_[static_cast<std::size_t>(i)].central) continue;
    for (int j = 0; j < dim(); ++j)
      if (!bracket_gen(i, j).is_zero() || !bracket_gen(j, i).is_zero()) return std::make_pair(i, j);
  }
  return std::nullopt;
}

void StructureAlgebra::validate() const {
  if (auto w = verify_antisymmetry()) {
    throw ValidationError("algebra " + name_ + ": antisymmetry fails for (" + gens_[w->i].label + "," +
                          gens_[w->j].label + ")");
  }
  if (auto w = verify_jacobi()) {
    throw ValidationError("algebra " + name_ + ": Jacobi identity fails for (" + gens_[w->i].label + "," +
                          gens_[w->j].label + "," + gens_[w->k].label + ")");
  }
  if (auto w = verify_central()) {
    throw ValidationError("algebra " + name_ + ": central generator " + gens_[w->first].label +
                          " does not commute with " + gens_[w->second].label);
  }
  for (const auto& g : gens_) {
    if (g.identity && (!g.central || g.hermitian != 1))
      throw ValidationError("algebra " + name_ + ": identity generator " + g.label + " must be central and Hermitian");
  }
}

StructureAlgebra StructureAlgebra::rescaled(const GaussianRational& s) const {
  if (s.is_zero() || (!s.is_real() && sgn(s.re()) != 0))
    throw ArgumentError("rescaled: factor must be a nonzero real or imaginary number");
  auto gens = gens_;
  for (auto& g : gens) {
    if (g.identity) throw ArgumentError("rescaled: algebra has an identity generator");
    if (!s.is_real()) g.hermitian = -g.hermitian;
  }
  StructureAlgebra out(name_ + "-rescaled", std::move(gens));
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      std::map<int, GaussianRational> cell;
      for (const auto& [k, c] : table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) cell[k] = c * s;
      out.set_bracket_raw(i, j, cell);
    }
  }
  return out;
}

void StructureAlgebra::refresh_id() {
  std::ostringstream os;
  os << name_ << '|';
  for (const auto& g : gens_) os << g.label << ',' << g.hermitian << ',' << g.central << ',' << g.identity << ';';
  for (std::size_t i = 0; i < table_.size(); ++i)
    for (std::size_t j = 0; j < table_.size(); ++j)
      for (const auto& [k, c] : table_[i][j]) os << i << ' ' << j << ' ' << k << ' ' << c.str() << ';';
  // FNV-1a
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : os.str()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  id_ = h == 0 ? 1 : h;
}

}  // namespace liereach
