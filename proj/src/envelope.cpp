#include "liereach/envelope.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "liereach/errors.hpp"

namespace liereach {

Monomial::Monomial(std::vector<std::uint16_t> exponents) : exps_(std::move(exponents)) {
  order_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::generator(int d, int i) {
  std::vector<std::uint16_t> e(static_cast<std::size_t>(d), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return Monomial(std::move(e));
}

std::vector<int> Monomial::word() const {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(order_));
  for (std::size_t i = 0; i < exps_.size(); ++i) w.insert(w.end(), exps_[i], static_cast<int>(i));
  return w;
}

std::optional<int> EnvElement::order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.order();
}

const Monomial& EnvElement::leading() const {
  if (terms_.empty()) throw ArgumentError("leading(): zero element has no leading monomial");
  return terms_.begin()->first;
}

GaussianRational EnvElement::coef(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

void EnvElement::add(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void EnvElement::check_same(const EnvElement& o) const {
  if (algebra_ != 0 && o.algebra_ != 0 && algebra_ != o.algebra_)
    throw ArgumentError("EnvElement: elements belong to different algebras");
}

void EnvElement::add_scaled(const EnvElement& o, const GaussianRational& s) {
  check_same(o);
  if (algebra_ == 0) algebra_ = o.algebra_;
  if (s.is_zero()) return;
  for (const auto& [m, c] : o.terms_) add(m, c * s);
}

EnvElement& EnvElement::operator+=(const EnvElement& o) {
  check_same(o);
  if (algebra_ == 0) algebra_ = o.algebra_;
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& o) {
  check_same(o);
  if (algebra_ == 0) algebra_ = o.algebra_;
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

EnvElement& EnvElement::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

EnvElement grade_truncate(const EnvElement& a, int n) {
  if (n < 0) throw ArgumentError("grade_truncate: n must be >= 0");
  EnvElement out(a.algebra());
  for (const auto& [m, c] : a.terms())
    if (m.order() <= n) out.add(m, c);
  return out;
}

struct Envelope::Cache {
  std::mutex mu;
  std::unordered_map<std::string, EnvElement> words;
  std::unordered_map<std::string, EnvElement> products;
};

namespace {

std::string word_key(const std::vector<int>& w) {
  std::string k;
  k.reserve(w.size());
  for (int g : w) k.push_back(static_cast<char>(g));
  return k;
}

std::string product_key(const Monomial& a, const Monomial& b) {
  std::string k;
  for (auto e : a.exponents()) k.push_back(static_cast<char>(e));
  k.push_back('\xff');
  for (auto e : b.exponents()) k.push_back(static_cast<char>(e));
  return k;
}

}  // namespace

Envelope::Envelope(StructureAlgebra algebra) : algebra_(std::move(algebra)), cache_(std::make_shared<Cache>()) {
  if (algebra_.dim() > 120) throw ArgumentError("Envelope: too many generators");
  for (const auto& g : algebra_.generators()) identity_.push_back(g.identity);
}

void Envelope::check(const EnvElement& a) const {
  if (a.algebra() != 0 && a.algebra() != id())
    throw ArgumentError("element does not belong to the enveloping algebra of " + algebra_.name());
}

EnvElement Envelope::unit(GaussianRational c) const {
  EnvElement e(id());
  e.add(Monomial::unit(dim()), c);
  return e;
}

EnvElement Envelope::generator(int i, GaussianRational c) const {
  algebra_.gen(i);
  if (identity_[static_cast<std::size_t>(i)]) return unit(std::move(c));
  EnvElement e(id());
  e.add(Monomial::generator(dim(), i), c);
  return e;
}

EnvElement Envelope::monomial(std::vector<std::uint16_t> exponents, GaussianRational c) const {
  if (static_cast<int>(exponents.size()) != dim())
    throw ArgumentError("monomial: exponent vector has wrong length for " + algebra_.name());
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (identity_[i]) exponents[i] = 0;
  EnvElement e(id());
  e.add(Monomial(std::move(exponents)), c);
  return e;
}

EnvElement Envelope::embed(const AlgebraElement& x) const {
  if (x.algebra() != 0 && x.algebra() != id()) throw ArgumentError("embed: element from another algebra");
  EnvElement e(id());
  for (const auto& [i, c] : x.coords()) e += generator(i, c);
  return e;
}

EnvElement Envelope::normal_order(std::span<const int> word) const {
  std::vector<int> w;
  w.reserve(word.size());
  for (int g : word) {
    algebra_.gen(g);
    if (!identity_[static_cast<std::size_t>(g)]) w.push_back(g);
  }
  return normal_order_impl(std::move(w));
}

EnvElement Envelope::normal_order_impl(std::vector<int> w) const {
  auto descent = std::adjacent_find(w.begin(), w.end(), [](int a, int b) { return a > b; });
  if (descent == w.end()) {
    std::vector<std::uint16_t> exps(static_cast<std::size_t>(dim()), 0);
    for (int g : w) ++exps[static_cast<std::size_t>(g)];
    EnvElement e(id());
    e.add(Monomial(std::move(exps)), 1);
    return e;
  }

  const std::string key = word_key(w);
  {
    std::lock_guard lock(cache_->mu);
    if (auto it = cache_->words.find(key); it != cache_->words.end()) return it->second;
  }

  const auto pos = static_cast<std::size_t>(descent - w.begin());
  const int b = w[pos], a = w[pos + 1];

  std::vector<int> swapped = w;
  std::swap(swapped[pos], swapped[pos + 1]);
  EnvElement result = normal_order_impl(std::move(swapped));

  // L_b L_a = L_a L_b + sum_k c[b][a][k] L_k
  const AlgebraElement correction = algebra_.bracket_gen(b, a);
  for (const auto& [k, c] : correction.coords()) {
    std::vector<int> shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    if (!identity_[static_cast<std::size_t>(k)]) shorter.push_back(k);
    shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
    result.add_scaled(normal_order_impl(std::move(shorter)), c);
  }

  std::lock_guard lock(cache_->mu);
  cache_->words.emplace(key, result);
  return result;
}

EnvElement Envelope::monomial_product(const Monomial& a, const Monomial& b) const {
  if (a.is_unit() || b.is_unit()) {
    EnvElement e(id());
    e.add(a.is_unit() ? b : a, 1);
    return e;
  }
  const std::string key = product_key(a, b);
  {
    std::lock_guard lock(cache_->mu);
    if (auto it = cache_->products.find(key); it != cache_->products.end()) return it->second;
  }
  std::vector<int> w = a.word();
  std::vector<int> wb = b.word();
  w.insert(w.end(), wb.begin(), wb.end());
  EnvElement result = normal_order_impl(std::move(w));
  std::lock_guard lock(cache_->mu);
  cache_->products.emplace(key, result);
  return result;
}

EnvElement Envelope::multiply(const EnvElement& a, const EnvElement& b) const {
  check(a);
  check(b);
  EnvElement out(id());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add_scaled(monomial_product(ma, mb), ca * cb);
  }
  return out;
}

EnvElement Envelope::power(const EnvElement& a, int k) const {
  if (k < 0) throw ArgumentError("power: negative exponent");
  EnvElement out = unit();
  for (int i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

EnvElement Envelope::bracket(const EnvElement& a, const EnvElement& b) const {
  check(a);
  check(b);
  EnvElement out(id());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.is_unit() || mb.is_unit() || ma == mb) continue;
      GaussianRational c = ca * cb;
      out.add_scaled(monomial_product(ma, mb), c);
      out.add_scaled(monomial_product(mb, ma), -c);
    }
  }
  return out;
}

EnvElement Envelope::adjoint(const EnvElement& a) const {
  check(a);
  EnvElement out(id());
  for (const auto& [m, c] : a.terms()) {
    std::vector<int> w = m.word();
    std::reverse(w.begin(), w.end());
    GaussianRational s = c.conj();
    for (int g : w)
      if (algebra_.gen(g).hermitian < 0) s = -s;
    out.add_scaled(normal_order_impl(std::move(w)), s);
  }
  return out;
}

bool Envelope::is_skew(const EnvElement& a) const { return adjoint(a) == -a; }

std::string Envelope::render(const Monomial& m) const {
  if (m.is_unit()) return "1";
  std::string s;
  for (int i = 0; i < dim(); ++i) {
    auto e = m.exponents()[static_cast<std::size_t>(i)];
    if (e > 0) s += algebra_.gen(i).label + "^" + std::to_string(e);
  }
  return s;
}

std::string Envelope::render(const EnvElement& a) const {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : a.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + render(m);
  }
  return s;
}

std::size_t Envelope::cache_size() const {
  std::lock_guard lock(cache_->mu);
  return cache_->words.size() + cache_->products.size();
}

void Envelope::clear_cache() const {
  std::lock_guard lock(cache_->mu);
  cache_->words.clear();
  cache_->products.clear();
}

}  // namespace liereach
