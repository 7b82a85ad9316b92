#include "indideal/indep.hpp"

#include <unordered_map>

#include "indideal/errors.hpp"

namespace indideal {

IndependentSetEnumerator::IndependentSetEnumerator(const Graph& g)
    : n_(g.vertex_count()) {
  adj_.reserve(n_);
  for (std::size_t v = 0; v < n_; ++v) adj_.push_back(g.neighbors(v));
}

// Depth-first over sets of exactly `target_` vertices, children extended by
// ascending vertex label. Preorder restricted to one cardinality is exactly
// the required lexicographic order.
bool IndependentSetEnumerator::descend_to_emission() {
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    std::size_t need = target_ - f.chosen.count();
    if (f.candidates.count() < need) {  // bound: not enough candidates left
      stack_.pop_back();
      continue;
    }
    std::size_t v = f.candidates.next_set_bit(f.next_try);
    if (v == Bitset::npos) {
      stack_.pop_back();
      continue;
    }
    f.next_try = v + 1;
    Bitset chosen = f.chosen;
    chosen.set(v);
    if (chosen.count() == target_) {
      emitted_this_round_ = true;
      // Frame stays; the sibling after v is tried on the next call.
      stack_.push_back(Frame{chosen, Bitset(n_), n_});
      return true;
    }
    Bitset cand = f.candidates.minus(adj_[v]);
    // only vertices above v keep the ascending emission order
    Bitset above(n_);
    for (std::size_t u = v + 1; u < n_; ++u) above.set(u);
    cand &= above;
    stack_.push_back(Frame{std::move(chosen), std::move(cand), v + 1});
  }
  return false;
}

std::optional<Bitset> IndependentSetEnumerator::next() {
  if (done_) return std::nullopt;
  if (target_ == 0) {  // the empty set opens every stream
    target_ = 1;
    emitted_this_round_ = false;
    Bitset cand = Bitset::full(n_);
    stack_.push_back(Frame{Bitset(n_), std::move(cand), 0});
    return Bitset(n_);
  }
  while (true) {
    if (descend_to_emission()) {
      Bitset out = stack_.back().chosen;
      stack_.pop_back();
      return out;
    }
    // round for `target_` exhausted; downward closure says stop when empty
    if (!emitted_this_round_ || target_ >= n_) {
      done_ = true;
      return std::nullopt;
    }
    ++target_;
    emitted_this_round_ = false;
    stack_.push_back(Frame{Bitset(n_), Bitset::full(n_), 0});
  }
}

std::vector<Bitset> all_independent_sets(const Graph& g) {
  std::vector<Bitset> out;
  IndependentSetEnumerator it(g);
  while (auto s = it.next()) out.push_back(std::move(*s));
  return out;
}

std::vector<BigInt> independent_set_counts_by_enumeration(const Graph& g) {
  std::vector<BigInt> counts;
  IndependentSetEnumerator it(g);
  while (auto s = it.next()) {
    std::size_t k = s->count();
    if (counts.size() <= k) counts.resize(k + 1, 0);
    ++counts[k];
  }
  return counts;
}

namespace {

using Poly = std::vector<BigInt>;

struct CountingContext {
  const Graph& g;
  std::unordered_map<Bitset, Poly, BitsetHash> memo;
  static constexpr std::size_t kMemoCap = std::size_t{1} << 20;

  Poly count(Bitset residual) {
    // Batch out vertices isolated within the residual: they contribute a
    // (1+x)^k factor and collapsing them keeps the memo key set small.
    Bitset iso(residual.size());
    residual.for_each_bit([&](std::size_t v) {
      if (!g.neighbors(v).intersects(residual)) iso.set(v);
    });
    std::size_t isolated = iso.count();
    if (isolated) residual = residual.minus(iso);

    Poly core{BigInt(1)};
    if (residual.any()) {
      auto hit = memo.find(residual);
      if (hit != memo.end()) {
        core = hit->second;
      } else {
        // pivot: lowest-index vertex of maximum residual degree
        std::size_t pivot = Bitset::npos, best = 0;
        residual.for_each_bit([&](std::size_t v) {
          std::size_t deg = (g.neighbors(v) & residual).count();
          if (pivot == Bitset::npos || deg > best) {
            pivot = v;
            best = deg;
          }
        });
        Bitset without_pivot = residual;
        without_pivot.reset(pivot);
        Bitset without_closed = without_pivot.minus(g.neighbors(pivot));

        Poly skip = count(without_pivot);
        Poly take = count(without_closed);
        core = std::move(skip);
        if (core.size() < take.size() + 1) core.resize(take.size() + 1, 0);
        for (std::size_t k = 0; k < take.size(); ++k) core[k + 1] += take[k];
        if (memo.size() < kMemoCap) memo.emplace(residual, core);
      }
    }

    if (isolated == 0) return core;
    Poly out(core.size() + isolated, 0);
    for (std::size_t k = 0; k < core.size(); ++k)
      for (std::size_t i = 0; i <= isolated; ++i)
        out[k + i] += core[k] * binomial(static_cast<long long>(isolated),
                                         static_cast<long long>(i));
    return out;
  }
};

}  // namespace

IndependencePolynomial independence_polynomial(const Graph& g) {
  CountingContext ctx{g, {}};
  Poly coeffs = ctx.count(Bitset::full(g.vertex_count()));
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return IndependencePolynomial{std::move(coeffs)};
}

std::size_t independence_number(const Graph& g) {
  return independence_polynomial(g).alpha();
}

IndependencePolynomial path_coefficients(long long n) {
  if (n < 1) throw ArgumentError("path_coefficients requires n >= 1");
  long long kmax = (n + 1) / 2;
  IndependencePolynomial p;
  p.coeffs.reserve(kmax + 1);
  for (long long k = 0; k <= kmax; ++k) p.coeffs.push_back(binomial(n + 1 - k, k));
  return p;
}

IndependencePolynomial centipede_coefficients(long long n) {
  if (n < 1) throw ArgumentError("centipede_coefficients requires n >= 1");
  IndependencePolynomial p;
  p.coeffs.reserve(n + 1);
  for (long long k = 0; k <= n; ++k) {
    BigInt s = 0;
    for (long long j = 0; j <= k; ++j)
      s += binomial(n - j, n - k) * binomial(n + 1 - j, j);
    p.coeffs.push_back(std::move(s));
  }
  return p;
}

IndependencePolynomial cycle_power_coefficients(long long n, long long d) {
  if (d < 1) throw ArgumentError("cycle_power_coefficients requires d >= 1");
  if (n < d + 1) throw ArgumentError("cycle_power_coefficients requires n >= d+1");
  long long kmax = n / (d + 1);
  IndependencePolynomial p;
  p.coeffs.reserve(kmax + 1);
  for (long long k = 0; k <= kmax; ++k)
    p.coeffs.push_back(cyclic_selection_count(n, d, k));
  return p;
}

}  // namespace indideal
