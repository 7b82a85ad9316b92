#include "indideal/invariants.hpp"

#include <algorithm>
#include <unordered_set>

#include "indideal/errors.hpp"

namespace indideal {

std::vector<std::string> PrimeComponent::variable_names() const {
  if (kind == Kind::vertex)
    return {"s" + std::to_string(i + 1), "t" + std::to_string(i + 1)};
  return {"t" + std::to_string(i + 1), "t" + std::to_string(j + 1)};
}

std::vector<PrimeComponent> primary_decomposition(const Graph& g) {
  std::vector<PrimeComponent> out;
  std::size_t n = g.vertex_count();
  out.reserve(n + g.edge_count());
  for (std::size_t v = 0; v < n; ++v)
    out.push_back({PrimeComponent::Kind::vertex, v, v});
  for (auto [u, v] : g.edges())  // already ascending lexicographic
    out.push_back({PrimeComponent::Kind::edge, u, v});
  return out;
}

MonomialIdeal component_ideal(const PrimeComponent& c, std::size_t n) {
  Bitset none(n);
  if (c.kind == PrimeComponent::Kind::vertex) {
    Bitset si(n), ti(n);
    si.set(c.i);
    ti.set(c.i);
    return MonomialIdeal::from_minimal(
        {SquarefreeMonomial(si, none), SquarefreeMonomial(none, ti)});
  }
  Bitset ti(n), tj(n);
  ti.set(c.i);
  tj.set(c.j);
  return MonomialIdeal::from_minimal(
      {SquarefreeMonomial(none, ti), SquarefreeMonomial(none, tj)});
}

std::vector<BigInt> betti_numbers(const IndependencePolynomial& poly) {
  std::size_t alpha = poly.alpha();
  std::vector<BigInt> betti(alpha + 1, 0);
  for (std::size_t i = 0; i <= alpha; ++i)
    for (std::size_t k = 0; k <= alpha; ++k)
      betti[i] += poly.coeffs[k] * binomial(static_cast<long long>(k),
                                            static_cast<long long>(i));
  return betti;
}

std::size_t projective_dimension(const IndependencePolynomial& poly) {
  return poly.alpha() + 1;
}

std::size_t regularity(const Graph& g) { return g.vertex_count(); }

std::size_t krull_dimension(const Graph& g) {
  auto primes = primary_decomposition(g);
  std::size_t min_height = 2;  // every component is generated by 2 variables
  for (const auto& c : primes)
    min_height = std::min<std::size_t>(min_height, c.variable_names().size());
  std::size_t dim = 2 * g.vertex_count() - min_height;
  if (dim != 2 * g.vertex_count() - 2)
    throw InternalError("krull_dimension: decomposition disagrees with 2n-2");
  return dim;
}

bool is_cohen_macaulay(const Graph& g) { return g.is_complete(); }

MonomialIdeal alexander_dual(const Graph& g) {
  std::size_t n = g.vertex_count();
  std::vector<SquarefreeMonomial> gens;
  gens.reserve(n + g.edge_count());
  for (const auto& c : primary_decomposition(g)) {
    Bitset s(n), t(n);
    if (c.kind == PrimeComponent::Kind::vertex) {
      s.set(c.i);
      t.set(c.i);
    } else {
      t.set(c.i);
      t.set(c.j);
    }
    gens.emplace_back(std::move(s), std::move(t));
  }
  // distinct squarefree degree-2 monomials: minimal as given, vertex gens
  // first then edge gens, both ascending
  return MonomialIdeal::from_minimal(std::move(gens));
}

std::string ternary_name(Ternary t) {
  switch (t) {
    case Ternary::yes: return "true";
    case Ternary::no: return "false";
    case Ternary::undecided: return "undecided";
  }
  return "?";
}

namespace {

// Precomputed colon data for one ordered generator pair (u, g):
// u / gcd(u, g), classified by degree.
struct PairQuotient {
  std::size_t degree;
  SquarefreeMonomial quotient;
};

// Is the colon of the generators in `used` by gens[candidate] generated by
// variables? Quotients of degree 1 are variables; every degree-2 quotient
// must be divisible by one of them.
bool colon_is_linear(const std::vector<std::vector<PairQuotient>>& pairs,
                     std::uint64_t used, std::size_t candidate, std::size_t n) {
  Bitset vars_s(n), vars_t(n);
  const auto& row = pairs[candidate];
  for (std::size_t u = 0; u < row.size(); ++u) {
    if (!(used >> u & 1)) continue;
    if (row[u].degree == 0) return false;  // unit colon is not variable-generated
    if (row[u].degree == 1) {
      vars_s |= row[u].quotient.s_mask;
      vars_t |= row[u].quotient.t_mask;
    }
  }
  for (std::size_t u = 0; u < row.size(); ++u) {
    if (!(used >> u & 1) || row[u].degree <= 1) continue;
    if (!row[u].quotient.s_mask.intersects(vars_s) &&
        !row[u].quotient.t_mask.intersects(vars_t))
      return false;
  }
  return true;
}

}  // namespace

LinearQuotientSearchResult find_linear_quotient_order(
    const std::vector<SquarefreeMonomial>& gens,
    const LinearQuotientSearchOptions& opts) {
  LinearQuotientSearchResult result;
  std::size_t count = gens.size();
  if (count <= 1) {
    result.status = Ternary::yes;  // a single generator has trivial quotients
    for (std::size_t i = 0; i < count; ++i) result.order.push_back(i);
    return result;
  }
  if (count > 64) return result;  // undecided; beyond the subset encoding

  std::size_t n = gens[0].vertex_capacity();
  std::vector<std::vector<PairQuotient>> pairs(count);
  for (std::size_t c = 0; c < count; ++c) {
    pairs[c].reserve(count);
    for (std::size_t u = 0; u < count; ++u) {
      SquarefreeMonomial q = gens[u].quotient_by(gens[c]);
      pairs[c].push_back({q.degree(), std::move(q)});
    }
  }

  bool budgeted = count > opts.exhaustive_max_gens;
  std::uint64_t full = count == 64 ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << count) - 1;
  std::unordered_set<std::uint64_t> visited;
  std::vector<std::size_t> chosen;
  chosen.reserve(count);
  bool budget_hit = false;

  // DFS over prefix subsets; the prefix ideal is order-independent, so each
  // subset needs one visit.
  auto dfs = [&](auto&& self, std::uint64_t used) -> bool {
    if (used == full) return true;
    if (!visited.insert(used).second) return false;
    ++result.states_visited;
    if (budgeted && result.states_visited > opts.node_budget) {
      budget_hit = true;
      return false;
    }
    for (std::size_t c = 0; c < count; ++c) {
      if (used >> c & 1) continue;
      if (used != 0 && !colon_is_linear(pairs, used, c, n)) continue;
      chosen.push_back(c);
      if (self(self, used | (std::uint64_t{1} << c))) return true;
      if (budget_hit) return false;
      chosen.pop_back();
    }
    return false;
  };

  if (dfs(dfs, 0)) {
    result.status = Ternary::yes;
    result.order = chosen;
  } else {
    result.status = budget_hit ? Ternary::undecided : Ternary::no;
  }
  return result;
}

Ternary dual_has_linear_resolution(const Graph& g,
                                   const LinearQuotientSearchOptions& opts) {
  return find_linear_quotient_order(alexander_dual(g).generators(), opts).status;
}

InvariantReport build_invariant_report(const Graph& g,
                                       const LinearQuotientSearchOptions& opts) {
  InvariantReport r;
  auto poly = independence_polynomial(g);
  r.betti = betti_numbers(poly);
  r.projdim_quotient = projective_dimension(poly);
  r.regularity = regularity(g);
  r.krull_dim = krull_dimension(g);
  r.cohen_macaulay = is_cohen_macaulay(g);
  r.primes = primary_decomposition(g);
  r.dual_gens = alexander_dual(g).generators();
  r.dual_linear_resolution = dual_has_linear_resolution(g, opts);

  // Consistency among the three Cohen-Macaulay routes: completeness,
  // alpha = 1, and depth (2n - projdim) meeting the Krull dimension.
  bool via_alpha = poly.alpha() == 1;
  bool via_depth = 2 * g.vertex_count() - r.projdim_quotient == r.krull_dim;
  if (r.cohen_macaulay != via_alpha || r.cohen_macaulay != via_depth)
    throw InternalError("invariant report: Cohen-Macaulay routes disagree");
  if (r.dual_linear_resolution != Ternary::undecided &&
      (r.dual_linear_resolution == Ternary::yes) != r.cohen_macaulay)
    throw InternalError("invariant report: dual resolution contradicts CM");
  return r;
}

Json invariant_report_json(const InvariantReport& report) {
  Json betti = Json::array();
  for (const auto& b : report.betti) betti.push_back(Json::number(b));
  Json primes = Json::array();
  for (const auto& p : report.primes) {
    Json pair = Json::array();
    for (const auto& v : p.variable_names()) pair.push_back(Json::string(v));
    primes.push_back(std::move(pair));
  }
  Json duals = Json::array();
  for (const auto& m : report.dual_gens) duals.push_back(Json::string(m.render()));

  Json out = Json::object();
  out.set("betti", std::move(betti));
  out.set("projdim_quotient", Json::number(report.projdim_quotient));
  out.set("regularity", Json::number(report.regularity));
  out.set("krull_dim", Json::number(report.krull_dim));
  out.set("cohen_macaulay", Json::boolean(report.cohen_macaulay));
  out.set("primes", std::move(primes));
  out.set("dual_gens", std::move(duals));
  out.set("dual_linear_resolution",
          report.dual_linear_resolution == Ternary::undecided
              ? Json::string("undecided")
              : Json::boolean(report.dual_linear_resolution == Ternary::yes));
  return out;
}

}  // namespace indideal
