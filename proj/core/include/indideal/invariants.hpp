#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "indideal/bigint.hpp"
#include "indideal/graph.hpp"
#include "indideal/ideal.hpp"
#include "indideal/indep.hpp"
#include "indideal/json_writer.hpp"

namespace indideal {

// Minimal prime of the independence ideal: (s_i, t_i) for a vertex,
// (t_i, t_j) for an edge. Indices are 0-based; rendering is 1-based.
struct PrimeComponent {
  enum class Kind { vertex, edge };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;  // edge components only, i < j

  std::vector<std::string> variable_names() const;
  friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
};

// One vertex prime per vertex, one edge prime per edge; vertex primes first
// (ascending), then edge primes in ascending lexicographic order.
std::vector<PrimeComponent> primary_decomposition(const Graph& g);

// The component as a 2-generator monomial ideal over n vertices.
MonomialIdeal component_ideal(const PrimeComponent& c, std::size_t n);

// beta_i = sum_k s_k * C(k, i), for i = 0..alpha.
std::vector<BigInt> betti_numbers(const IndependencePolynomial& poly);

// projdim of the quotient ring: alpha + 1.
std::size_t projective_dimension(const IndependencePolynomial& poly);

// reg(I) = |V(G)|.
std::size_t regularity(const Graph& g);

// dim of the quotient: 2n - 2 via (variables) - (min component height),
// cross-asserted against the closed form.
std::size_t krull_dimension(const Graph& g);

// Quotient is Cohen-Macaulay exactly when the graph is complete.
bool is_cohen_macaulay(const Graph& g);

// Generators of the dual ideal: s_i*t_i per vertex, then t_i*t_j per edge,
// read off the minimal primes; all of degree 2 and automatically minimal.
MonomialIdeal alexander_dual(const Graph& g);

enum class Ternary { yes, no, undecided };

std::string ternary_name(Ternary t);

// Search for a linear-quotients ordering of a generating set.
//
// States are generator subsets (the prefix ideal does not depend on prefix
// order), so the DFS memoizes on subsets and a completed search is an
// exhaustive decision. Instances above `exhaustive_max_gens` run under
// `node_budget`; exhausting the budget yields `undecided`, never a wrong
// boolean. `no` is only ever produced by a completed search.
struct LinearQuotientSearchOptions {
  std::size_t exhaustive_max_gens = 16;
  std::size_t node_budget = 1u << 20;
};

struct LinearQuotientSearchResult {
  Ternary status = Ternary::undecided;
  std::vector<std::size_t> order;  // witness ordering when status == yes
  std::size_t states_visited = 0;
};

LinearQuotientSearchResult find_linear_quotient_order(
    const std::vector<SquarefreeMonomial>& gens,
    const LinearQuotientSearchOptions& opts = {});

// Does the dual ideal admit a linear resolution? Decided by the
// linear-quotients search on its degree-2 generators (the two properties
// coincide in degree 2).
Ternary dual_has_linear_resolution(const Graph& g,
                                   const LinearQuotientSearchOptions& opts = {});

struct InvariantReport {
  std::vector<BigInt> betti;
  std::size_t projdim_quotient = 0;
  std::size_t regularity = 0;
  std::size_t krull_dim = 0;
  bool cohen_macaulay = false;
  std::vector<PrimeComponent> primes;
  std::vector<SquarefreeMonomial> dual_gens;
  Ternary dual_linear_resolution = Ternary::undecided;
};

InvariantReport build_invariant_report(const Graph& g,
                                       const LinearQuotientSearchOptions& opts = {});

Json invariant_report_json(const InvariantReport& report);

}  // namespace indideal
