#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "indideal/bigint.hpp"
#include "indideal/bitset.hpp"
#include "indideal/graph.hpp"

namespace indideal {

// Coefficient vector of the independence polynomial: coeffs[k] counts the
// independent sets of cardinality k. Length is alpha+1, coeffs[0] = 1.
struct IndependencePolynomial {
  std::vector<BigInt> coeffs;

  std::size_t alpha() const { return coeffs.size() - 1; }
  BigInt total() const {  // value at 1 = number of independent sets
    BigInt t = 0;
    for (const auto& c : coeffs) t += c;
    return t;
  }
  friend bool operator==(const IndependencePolynomial& a,
                         const IndependencePolynomial& b) {
    return a.coeffs == b.coeffs;
  }
};

// Streams every independent set exactly once: ascending cardinality, and
// within one cardinality ascending lexicographic order of the sorted vertex
// list (sets containing smaller labels first). This is the descending
// generator order the ideal layer relies on, so it is normative.
//
// Implemented as iterative-deepening branch and bound over bitmasks: the
// candidate set shrinks by neighbor masks as vertices are chosen.
class IndependentSetEnumerator {
 public:
  explicit IndependentSetEnumerator(const Graph& g);

  // Next set in order, or nullopt when exhausted.
  std::optional<Bitset> next();

 private:
  struct Frame {
    Bitset chosen;
    Bitset candidates;
    std::size_t next_try;  // next candidate position to branch on
  };

  bool descend_to_emission();

  std::vector<Bitset> adj_;
  std::size_t n_;
  std::size_t target_ = 0;       // current cardinality being emitted
  bool emitted_this_round_ = false;
  bool done_ = false;
  std::vector<Frame> stack_;
};

// All independent sets, materialized in the enumerator's order.
std::vector<Bitset> all_independent_sets(const Graph& g);

// Counts by cardinality via plain enumeration; the slow reference route.
std::vector<BigInt> independent_set_counts_by_enumeration(const Graph& g);

// Counting DP over residual-vertex bitmasks: I(G) = I(G-v) + x*I(G-N[v]),
// pivoting on a maximum-degree vertex, with isolated vertices batched as a
// (1+x)^k factor. Memoized with a bounded cache, so large sparse graphs are
// countable without enumeration.
IndependencePolynomial independence_polynomial(const Graph& g);

std::size_t independence_number(const Graph& g);

// Closed forms for the named families; exact integers throughout.
IndependencePolynomial path_coefficients(long long n);
IndependencePolynomial centipede_coefficients(long long n);
IndependencePolynomial cycle_power_coefficients(long long n, long long d);

}  // namespace indideal
