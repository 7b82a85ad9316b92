#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "indideal/bigint.hpp"
#include "indideal/bitset.hpp"
#include "indideal/graph.hpp"
#include "indideal/monomial.hpp"

namespace testutil {

using indideal::BigInt;
using indideal::Bitset;
using indideal::Graph;

// 1-indexed edge list, matching the notation used throughout the tests.
inline Graph make_graph(std::size_t n,
                        std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::pair<std::size_t, std::size_t>> zero_based;
  for (auto [u, v] : edges)
    zero_based.emplace_back(static_cast<std::size_t>(u - 1),
                            static_cast<std::size_t>(v - 1));
  return Graph(n, zero_based);
}

inline Bitset vertex_set(std::size_t n, std::initializer_list<int> verts) {
  Bitset b(n);
  for (int v : verts) b.set(static_cast<std::size_t>(v - 1));
  return b;
}

// Exhaustive subset-scan oracle, deliberately independent of the library's
// enumerator: a subset is independent when it contains no edge.
inline std::vector<Bitset> brute_force_independent_sets(const Graph& g) {
  std::size_t n = g.vertex_count();
  auto edges = g.edges();
  std::vector<Bitset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : edges)
      if ((mask >> u & 1) && (mask >> v & 1)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Bitset b(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) b.set(i);
    out.push_back(std::move(b));
  }
  return out;
}

inline std::vector<BigInt> brute_force_counts(const Graph& g) {
  std::vector<BigInt> counts;
  for (const auto& s : brute_force_independent_sets(g)) {
    std::size_t k = s.count();
    if (counts.size() <= k) counts.resize(k + 1, 0);
    ++counts[k];
  }
  return counts;
}

// The normative stream order, restated via sorted vertex lists: ascending
// cardinality, then ascending lexicographic vertex list.
inline bool normative_order_less(const Bitset& a, const Bitset& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  auto va = a.bits(), vb = b.bits();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

inline std::vector<Graph> all_labeled_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t e = 0; e < slots.size(); ++e)
      if (mask >> e & 1) edges.push_back(slots[e]);
    out.emplace_back(n, edges);
  }
  return out;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline std::vector<std::string> render_all(
    const std::vector<indideal::SquarefreeMonomial>& monomials) {
  std::vector<std::string> out;
  out.reserve(monomials.size());
  for (const auto& m : monomials) out.push_back(m.render());
  return out;
}

}  // namespace testutil
