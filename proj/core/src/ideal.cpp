#include "indideal/ideal.hpp"

#include <algorithm>
#include <cassert>

#include "indideal/errors.hpp"
#include "indideal/indep.hpp"
#include "indideal/parallel.hpp"

namespace indideal {

std::vector<SquarefreeMonomial> minimalize(std::vector<SquarefreeMonomial> gens) {
  // Degree-bucketed sweep: after sorting by ascending degree only earlier
  // kept generators can divide a candidate.
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<SquarefreeMonomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (k.degree() >= g.degree()) break;  // equal-degree distinct monomials never divide
      if (k.divides(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal MonomialIdeal::minimalized(std::vector<SquarefreeMonomial> gens) {
  return MonomialIdeal(minimalize(std::move(gens)));
}

MonomialIdeal MonomialIdeal::from_minimal(std::vector<SquarefreeMonomial> gens) {
#ifndef NDEBUG
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      assert(i == j || !gens[i].divides(gens[j]));
#endif
  return MonomialIdeal(std::move(gens));
}

bool MonomialIdeal::contains(const SquarefreeMonomial& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  // Minimal generating sets are unique, so compare as sets via canonical sort.
  if (a.gens_.size() != b.gens_.size()) return false;
  auto sa = a.gens_, sb = b.gens_;
  std::sort(sa.begin(), sa.end(), canonical_less);
  std::sort(sb.begin(), sb.end(), canonical_less);
  return sa == sb;
}

SquarefreeMonomial phi(const Graph& g, const Bitset& independent_set) {
  if (!g.is_independent(independent_set))
    throw ArgumentError("phi: set is not independent");
  return {independent_set, independent_set.complement()};
}

GeneratorOrder::GeneratorOrder(std::size_t n, std::vector<Entry> entries)
    : n_(n), entries_(std::move(entries)) {
  assert(!entries_.empty() && entries_.front().set.none());
#ifndef NDEBUG
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    // strictly descending; ties are impossible since s-parts are distinct
    assert(generator_order_precedes(entries_[i].monomial, entries_[i + 1].monomial));
    assert(!generator_order_precedes(entries_[i + 1].monomial, entries_[i].monomial));
  }
#endif
}

IndependenceIdeal ideal_of_independent_sets(const Graph& g) {
  // The enumerator already emits the descending generator order, so phi maps
  // it straight into the canonical listing with no re-sorting.
  std::vector<GeneratorOrder::Entry> entries;
  std::vector<SquarefreeMonomial> gens;
  IndependentSetEnumerator it(g);
  while (auto s = it.next()) {
    SquarefreeMonomial m(*s, s->complement());
    gens.push_back(m);
    entries.push_back({std::move(*s), std::move(m)});
  }
  // all generators share degree n and are distinct, hence already minimal
  return IndependenceIdeal{MonomialIdeal::from_minimal(std::move(gens)),
                           GeneratorOrder(g.vertex_count(), std::move(entries))};
}

bool monomial_divides(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
  return a.divides(b);
}

std::vector<SquarefreeMonomial> colon_generators(std::span<const SquarefreeMonomial> gens,
                                                 const SquarefreeMonomial& m) {
  std::vector<SquarefreeMonomial> quotients;
  quotients.reserve(gens.size());
  for (const auto& u : gens) quotients.push_back(u.quotient_by(m));
  return minimalize(std::move(quotients));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const SquarefreeMonomial& m) {
  return MonomialIdeal::from_minimal(colon_generators(ideal.generators(), m));
}

namespace {

// One prefix check: colon generators must be exactly {t_r : r in S_i}.
bool prefix_colon_matches(const GeneratorOrder& order, std::size_t i) {
  std::vector<SquarefreeMonomial> prefix;
  prefix.reserve(i);
  for (std::size_t j = 0; j < i; ++j) prefix.push_back(order[j].monomial);
  auto colon = colon_generators(prefix, order[i].monomial);

  const Bitset& set_i = order[i].set;
  if (colon.size() != set_i.count()) return false;
  Bitset seen(set_i.size());
  for (const auto& q : colon) {
    if (q.deg_s() != 0 || q.deg_t() != 1) return false;  // must be a single t-variable
    std::size_t r = q.t_mask.lowest_set_bit();
    if (!set_i.test(r)) return false;
    seen.set(r);
  }
  return seen == set_i;
}

}  // namespace

QuotientCheckReport verify_linear_quotients(const GeneratorOrder& order, unsigned threads) {
  QuotientCheckReport report;
  std::size_t count = order.size();
  if (count <= 1) return report;
  report.checked = count - 1;

  std::vector<std::vector<std::size_t>> local(threads > 1 ? threads : 1);
  parallel_chunks(count - 1, threads, [&](std::size_t lo, std::size_t hi, unsigned worker) {
    auto& sink = local[worker];
    for (std::size_t k = lo; k < hi; ++k) {
      std::size_t i = k + 1;  // indices 1..count-1 need checking
      if (!prefix_colon_matches(order, i)) sink.push_back(i);
    }
  });
  for (auto& part : local)
    report.violations.insert(report.violations.end(), part.begin(), part.end());
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

std::vector<std::size_t> set_sizes(const GeneratorOrder& order) {
  std::vector<std::size_t> out;
  out.reserve(order.size());
  for (const auto& e : order.entries()) out.push_back(e.set.count());
  return out;
}

}  // namespace indideal
