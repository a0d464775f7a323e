#include "liereach/closure.hpp"

#include <algorithm>
#include <thread>

#include "liereach/errors.hpp"

namespace liereach {

EnvElement EchelonSpace::reduce(const EnvElement& v) const {
  EnvElement r = v;
  // Rows vanish at every other pivot, so each pivot is eliminated exactly once
  // using the coefficient v had before any elimination touched it.
  for (const auto& [pivot, row] : rows_) {
    GaussianRational c = r.coef(pivot);
    if (!c.is_zero()) r.add_scaled(row, -c);
  }
  return r;
}

bool EchelonSpace::insert(const EnvElement& v) {
  EnvElement r = reduce(v);
  if (r.is_zero()) return false;
  r *= r.terms().begin()->second.inverse();
  const Monomial pivot = r.leading();
  for (auto& [p, row] : rows_) {
    GaussianRational c = row.coef(pivot);
    if (!c.is_zero()) row.add_scaled(r, -c);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<EnvElement> EchelonSpace::rows() const {
  std::vector<EnvElement> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::optional<int> EchelonSpace::max_order() const {
  if (rows_.empty()) return std::nullopt;
  return rows_.begin()->first.order();
}

namespace {

bool has_terms_above(const EnvElement& a, int cap) {
  auto o = a.order();
  return o && *o > cap;
}

void check_options(const ClosureOptions& opts) {
  if (opts.order_cap <= 0) throw ArgumentError("closure: order_cap must be positive");
  if (opts.iter_cap < 1) throw ArgumentError("closure: iter_cap must be >= 1");
}

/// Evaluates the brackets of one pass, possibly on several threads.
std::vector<EnvElement> bracket_batch(const Envelope& env, const std::vector<EnvElement>& elems,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& pairs, int threads) {
  std::vector<EnvElement> out(pairs.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t t = begin; t < pairs.size(); t += step)
      out[t] = env.bracket(elems[pairs[t].first], elems[pairs[t].second]);
  };
  const std::size_t n = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, pairs.size() + 1);
  if (n <= 1 || pairs.size() < 8) {
    work(0, 1);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < n; ++w) pool.emplace_back(work, w, n);
  work(0, n);
  for (auto& t : pool) t.join();
  return out;
}

LieClosureResult finish(LieClosureResult r) {
  r.basis = r.space.rows();
  r.dim = static_cast<int>(r.basis.size());
  r.max_order = r.space.max_order();
  return r;
}

}  // namespace

LieClosureResult lie_closure(const Envelope& env, const std::vector<EnvElement>& generators,
                             const ClosureOptions& opts) {
  check_options(opts);
  if (generators.empty()) throw ArgumentError("lie_closure: empty generator list");

  LieClosureResult r;
  r.order_cap = opts.order_cap;
  std::vector<EnvElement> elems;
  for (const auto& g : generators) {
    if (g.algebra() != 0 && g.algebra() != env.id())
      throw ArgumentError("lie_closure: generator from another algebra");
    if (has_terms_above(g, opts.order_cap))
      throw ArgumentError("lie_closure: order_cap below generator order " + std::to_string(*g.order()));
    EnvElement red = r.space.reduce(g);
    if (r.space.insert(red)) elems.push_back(std::move(red));
  }

  std::size_t frontier = 0;
  while (true) {
    if (r.iterations == opts.iter_cap) {
      r.iter_cap_hit = true;
      break;
    }
    ++r.iterations;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = frontier; j < elems.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    frontier = elems.size();

    std::vector<EnvElement> brackets = bracket_batch(env, elems, pairs, opts.threads);
    bool grew = false;
    for (auto& b : brackets) {
      if (has_terms_above(b, opts.order_cap)) {
        r.truncated = true;
        b = grade_truncate(b, opts.order_cap);
      }
      EnvElement red = r.space.reduce(b);
      if (r.space.insert(red)) {
        elems.push_back(std::move(red));
        grew = true;
      }
    }
    if (!grew) {
      r.saturated = true;
      break;
    }
  }
  return finish(std::move(r));
}

LieClosureResult build_c(const Envelope& env, const EnvElement& h0, const LieClosureResult& b, int k_max,
                         const ClosureOptions& opts) {
  check_options(opts);
  if (k_max < 0) k_max = opts.order_cap;
  std::vector<EnvElement> seeds;
  bool truncated = false;
  for (const auto& x : b.basis) {
    EnvElement cur = x;
    seeds.push_back(cur);
    for (int k = 1; k <= k_max; ++k) {
      cur = env.bracket(h0, cur);
      if (has_terms_above(cur, opts.order_cap)) {
        truncated = true;
        cur = grade_truncate(cur, opts.order_cap);
      }
      if (cur.is_zero()) break;
      seeds.push_back(cur);
    }
  }
  if (seeds.empty()) {
    LieClosureResult r;
    r.order_cap = opts.order_cap;
    r.saturated = true;
    return r;
  }
  LieClosureResult r = lie_closure(env, seeds, opts);
  r.truncated = r.truncated || truncated;
  return r;
}

BcCheck check_bc_in_b(const Envelope& env, const LieClosureResult& b, const LieClosureResult& c, int order_cap) {
  if (order_cap <= 0) throw ArgumentError("check_bc_in_b: order_cap must be positive");
  BcCheck out;
  for (const auto& x : b.basis) {
    for (const auto& y : c.basis) {
      ++out.pairs_checked;
      EnvElement r = b.space.reduce(grade_truncate(env.bracket(x, y), order_cap));
      if (!r.is_zero()) {
        out.holds = false;
        out.witness = BcWitness{x, y, std::move(r)};
        return out;
      }
    }
  }
  return out;
}

std::vector<Monomial> monomials_up_to(const Envelope& env, int n) {
  std::vector<int> free;
  for (int i = 0; i < env.dim(); ++i)
    if (!env.algebra().gen(i).identity) free.push_back(i);
  std::vector<Monomial> out;
  std::vector<std::uint16_t> exps(static_cast<std::size_t>(env.dim()), 0);
  // Enumerate exponent vectors over the free generators with total order 1..n.
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos == free.size()) {
      Monomial m(exps);
      if (!m.is_unit()) out.push_back(std::move(m));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[static_cast<std::size_t>(free[pos])] = static_cast<std::uint16_t>(e);
      self(self, pos + 1, remaining - e);
    }
    exps[static_cast<std::size_t>(free[pos])] = 0;
  };
  if (n >= 1) rec(rec, 0, n);
  std::sort(out.begin(), out.end(), LeadingFirst{});
  return out;
}

Coverage pbw_coverage(const Envelope& env, const LieClosureResult& result, int n) {
  if (n < 1) throw ArgumentError("pbw_coverage: n must be >= 1");
  if (n > result.order_cap) throw ArgumentError("pbw_coverage: n exceeds the closure's order cap");
  // Rows with pivot order <= n span exactly span(result) intersected with
  // E^(n). Adding the unit then isolates the order-1..n content.
  EchelonSpace low;
  low.insert(env.unit());
  for (const auto& row : result.basis)
    if (row.leading().order() <= n) low.insert(row);

  Coverage cov;
  cov.n = n;
  cov.covered = static_cast<int>(low.dim()) - 1;
  for (const auto& m : monomials_up_to(env, n)) {
    ++cov.total;
    EnvElement e(env.id());
    e.add(m, 1);
    if (!low.contains(e)) cov.missing.push_back(m);
  }
  return cov;
}

}  // namespace liereach
