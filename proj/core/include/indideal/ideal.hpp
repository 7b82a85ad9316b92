#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "indideal/graph.hpp"
#include "indideal/monomial.hpp"

namespace indideal {

// Finite set of minimal monomial generators: no generator divides another,
// no duplicates, deterministic order. Operations that derive new ideals
// (colons, intersections) re-minimalize and sort canonically; constructions
// with a normative order of their own (the generator order of the
// independence ideal, the vertex-then-edge order of the dual) keep it.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  // Minimalizes, dedupes and sorts into canonical order.
  static MonomialIdeal minimalized(std::vector<SquarefreeMonomial> gens);

  // Trusts `gens` to already be minimal and ordered.
  static MonomialIdeal from_minimal(std::vector<SquarefreeMonomial> gens);

  static MonomialIdeal unit(std::size_t n) {
    return from_minimal({SquarefreeMonomial::one(n)});
  }

  const std::vector<SquarefreeMonomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  // Membership: divisible by some generator.
  bool contains(const SquarefreeMonomial& m) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  explicit MonomialIdeal(std::vector<SquarefreeMonomial> gens) : gens_(std::move(gens)) {}
  std::vector<SquarefreeMonomial> gens_;
};

// Remove non-minimal elements and duplicates; result in canonical order.
std::vector<SquarefreeMonomial> minimalize(std::vector<SquarefreeMonomial> gens);

// The independence-ideal generator map: S |-> prod_{i in S} s_i * prod_{i
// not in S} t_i. Throws ArgumentError when S is not independent.
SquarefreeMonomial phi(const Graph& g, const Bitset& independent_set);

// Generators of the independence ideal listed descending in the generator
// order, paired with their independent sets. The first entry is always the
// empty set (monomial t_1...t_n); the listing is strictly descending.
class GeneratorOrder {
 public:
  struct Entry {
    Bitset set;
    SquarefreeMonomial monomial;
  };

  GeneratorOrder(std::size_t n, std::vector<Entry> entries);

  std::size_t vertex_count() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::size_t n_;
  std::vector<Entry> entries_;
};

struct IndependenceIdeal {
  MonomialIdeal ideal;
  GeneratorOrder order;
};

IndependenceIdeal ideal_of_independent_sets(const Graph& g);

bool monomial_divides(const SquarefreeMonomial& a, const SquarefreeMonomial& b);

// Minimal generators of (I : m). Reduces to quotients u/gcd(u,m) and stays
// squarefree on squarefree input. The unit ideal is the distinguished
// single-generator value.
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const SquarefreeMonomial& m);

// Same computation on a raw prefix of generators, avoiding ideal copies.
std::vector<SquarefreeMonomial> colon_generators(std::span<const SquarefreeMonomial> gens,
                                                 const SquarefreeMonomial& m);

// Prefix-colon verification: for every i > 1 the colon of the preceding
// generators by generator i must be generated by exactly {t_r : r in S_i}.
// Violations are report content (they falsify the order), not exceptions.
struct QuotientCheckReport {
  std::size_t checked = 0;
  std::vector<std::size_t> violations;  // 0-based indices into the order
  bool passed() const { return violations.empty(); }
};

QuotientCheckReport verify_linear_quotients(const GeneratorOrder& order,
                                            unsigned threads = 1);

// |set(m_i)| = |S_i| for each generator; set(m_1) is empty.
std::vector<std::size_t> set_sizes(const GeneratorOrder& order);

}  // namespace indideal
