#include "indideal/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "indideal/errors.hpp"
#include "indideal/parallel.hpp"

namespace indideal {

namespace {

// The variables of a multidegree in local order: s-variables ascending, then
// t-variables ascending. Each entry is (is_t, vertex).
std::vector<std::pair<bool, std::size_t>> support_variables(const SquarefreeMonomial& a) {
  std::vector<std::pair<bool, std::size_t>> vars;
  a.s_mask.for_each_bit([&](std::size_t v) { vars.emplace_back(false, v); });
  a.t_mask.for_each_bit([&](std::size_t v) { vars.emplace_back(true, v); });
  return vars;
}

SquarefreeMonomial drop_variables(const SquarefreeMonomial& a,
                                  const std::vector<std::pair<bool, std::size_t>>& vars,
                                  std::uint32_t subset) {
  SquarefreeMonomial m = a;
  for (std::size_t p = 0; p < vars.size(); ++p) {
    if (!(subset >> p & 1)) continue;
    if (vars[p].first) m.t_mask.reset(vars[p].second);
    else m.s_mask.reset(vars[p].second);
  }
  return m;
}

}  // namespace

SimplicialComplexSmall upper_koszul_complex(const MonomialIdeal& ideal,
                                            const SquarefreeMonomial& a) {
  auto vars = support_variables(a);
  if (vars.size() > 16)
    throw SizeError("upper_koszul_complex: multidegree support beyond 16 variables");

  SimplicialComplexSmall complex;
  complex.vertex_count = vars.size();
  if (!ideal.contains(a)) return complex;  // void

  std::uint32_t limit = std::uint32_t{1} << vars.size();
  for (std::uint32_t w = 0; w < limit; ++w)
    if (ideal.contains(drop_variables(a, vars, w))) complex.faces.push_back(w);
  // already emitted in increasing mask order
  return complex;
}

namespace {

// Rank over GF(2) by row elimination; rows are bit-packed.
std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_word;
  std::vector<std::uint64_t> pivot_bit;
  std::vector<std::size_t> pivot_rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto& row = rows[r];
    for (std::size_t p = 0; p < pivot_rows.size(); ++p) {
      if (row[pivot_word[p]] & pivot_bit[p]) {
        const auto& pr = rows[pivot_rows[p]];
        for (std::size_t w = 0; w < row.size(); ++w) row[w] ^= pr[w];
      }
    }
    std::size_t lead_word = row.size();
    for (std::size_t w = 0; w < row.size(); ++w)
      if (row[w]) {
        lead_word = w;
        break;
      }
    if (lead_word == row.size()) continue;  // dependent row
    pivot_word.push_back(lead_word);
    pivot_bit.push_back(row[lead_word] & (~row[lead_word] + 1));
    pivot_rows.push_back(r);
    ++rank;
  }
  return rank;
}

// Boundary-map rank from dimension d faces to dimension d-1 faces.
std::size_t boundary_rank(const std::vector<std::uint32_t>& upper,
                          const std::vector<std::uint32_t>& lower) {
  if (upper.empty() || lower.empty()) return 0;
  std::size_t words = (lower.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(upper.size());
  for (std::uint32_t face : upper) {
    std::vector<std::uint64_t> row(words, 0);
    std::uint32_t rest = face;
    while (rest) {
      std::uint32_t v = rest & (~rest + 1);
      std::uint32_t sub = face ^ v;
      auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      assert(it != lower.end() && *it == sub);  // downward closure
      std::size_t col = static_cast<std::size_t>(it - lower.begin());
      row[col >> 6] ^= std::uint64_t{1} << (col & 63);
      rest ^= v;
    }
    rows.push_back(std::move(row));
  }
  return gf2_rank(std::move(rows));
}

std::vector<std::vector<std::uint32_t>> faces_by_dimension(
    const SimplicialComplexSmall& complex) {
  // slot d+1 holds the dimension-d faces, so slot 0 is the empty face
  std::vector<std::vector<std::uint32_t>> by_dim(complex.vertex_count + 2);
  for (std::uint32_t f : complex.faces)
    by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  return by_dim;  // each slot stays sorted because faces are sorted by mask
}

// h[k] = dim H~_{k-1}, every boundary rank computed once.
std::vector<std::size_t> reduced_homology_all(const SimplicialComplexSmall& complex) {
  std::vector<std::size_t> h(complex.vertex_count + 1, 0);
  if (complex.is_void()) return h;
  auto by_dim = faces_by_dimension(complex);
  std::vector<std::size_t> rank(by_dim.size() + 1, 0);  // rank[s] = rank of d(s-1 -> s-2)
  for (std::size_t s = 1; s < by_dim.size(); ++s)
    rank[s] = boundary_rank(by_dim[s], by_dim[s - 1]);
  for (std::size_t k = 0; k < h.size(); ++k)
    h[k] = by_dim[k].size() - rank[k] - rank[k + 1];
  return h;
}

}  // namespace

std::size_t reduced_homology_gf2(const SimplicialComplexSmall& complex, int dim) {
  if (complex.is_void()) return 0;
  if (dim < -1 || dim > static_cast<int>(complex.vertex_count)) return 0;
  auto by_dim = faces_by_dimension(complex);

  auto cells = [&](int d) -> const std::vector<std::uint32_t>& {
    static const std::vector<std::uint32_t> empty;
    std::size_t slot = static_cast<std::size_t>(d + 1);
    return slot < by_dim.size() ? by_dim[slot] : empty;
  };

  std::size_t rank_d = boundary_rank(cells(dim), cells(dim - 1));
  std::size_t rank_above = boundary_rank(cells(dim + 1), cells(dim));
  std::size_t cycles = cells(dim).size() - rank_d;
  assert(cycles >= rank_above);
  return cycles - rank_above;
}

std::vector<BigInt> BettiTable::totals() const {
  std::size_t top = 0;
  for (const auto& [ij, v] : entries)
    if (v != 0) top = std::max(top, ij.first);
  std::vector<BigInt> out(entries.empty() ? 0 : top + 1, 0);
  for (const auto& [ij, v] : entries)
    if (v != 0) out[ij.first] += v;
  return out;
}

BettiTable betti_table_oracle(const MonomialIdeal& ideal, const BettiOracleOptions& opts) {
  // union of generator supports; multidegrees outside it give cones
  std::size_t n = ideal.generators().empty()
                      ? 0
                      : ideal.generators().front().vertex_capacity();
  Bitset s_support(n), t_support(n);
  for (const auto& g : ideal.generators()) {
    s_support |= g.s_mask;
    t_support |= g.t_mask;
  }
  SquarefreeMonomial support(s_support, t_support);
  std::size_t var_count = support.degree();
  if (var_count > opts.max_support_variables)
    throw SizeError("betti_table_oracle: " + std::to_string(var_count) +
                    " support variables exceed cap " +
                    std::to_string(opts.max_support_variables));
  auto vars = support_variables(support);

  std::uint64_t limit = std::uint64_t{1} << var_count;
  unsigned workers = opts.threads > 1 ? opts.threads : 1;
  std::vector<BettiTable> partial(workers);

  parallel_chunks(limit, opts.threads, [&](std::size_t lo, std::size_t hi, unsigned worker) {
    auto& table = partial[worker].entries;
    for (std::size_t pick = lo; pick < hi; ++pick) {
      // multidegree a = the picked subset of the support variables
      std::uint32_t drop = static_cast<std::uint32_t>(~pick) &
                           static_cast<std::uint32_t>(limit - 1);
      SquarefreeMonomial a = drop_variables(support, vars, drop);
      auto complex = upper_koszul_complex(ideal, a);
      if (complex.is_void()) continue;
      std::size_t j = a.degree();
      auto h = reduced_homology_all(complex);
      for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i]) table[{i, j}] += h[i];
    }
  });

  BettiTable result;
  for (const auto& part : partial)
    for (const auto& [ij, v] : part.entries) result.entries[ij] += v;
  return result;
}

MonomialIdeal intersect_ideals(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<SquarefreeMonomial> lcms;
  lcms.reserve(a.size() * b.size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) lcms.push_back(u.lcm(v));
  return MonomialIdeal::minimalized(std::move(lcms));
}

bool colon_membership_check(const MonomialIdeal& ideal, const SquarefreeMonomial& m,
                            const SquarefreeMonomial& w) {
  return ideal.contains(w.squarefree_product(m));
}

}  // namespace indideal
