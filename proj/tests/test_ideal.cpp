#include <doctest.h>

#include <random>

#include "indideal/errors.hpp"
#include "indideal/ideal.hpp"
#include "indideal/indep.hpp"
#include "test_util.hpp"

using namespace indideal;
using testutil::make_graph;
using testutil::render_all;
using testutil::vertex_set;

namespace {

SquarefreeMonomial mono(std::size_t n, std::initializer_list<int> s,
                        std::initializer_list<int> t) {
  return {vertex_set(n, s), vertex_set(n, t)};
}

}  // namespace

TEST_CASE("phi maps a set to its s/t split") {
  Graph p2 = make_graph(2, {{1, 2}});
  CHECK(phi(p2, vertex_set(2, {1})).render() == "s1*t2");
  CHECK(phi(p2, vertex_set(2, {})).render() == "t1*t2");

  Graph p3 = make_graph(3, {{1, 2}, {2, 3}});
  CHECK(phi(p3, vertex_set(3, {1, 3})).render() == "s1*s3*t2");
  CHECK(phi(p3, vertex_set(3, {1, 3})).degree() == 3);

  CHECK_THROWS_AS(phi(p2, vertex_set(2, {1, 2})), ArgumentError);
}

TEST_CASE("independence ideal generators in descending order") {
  auto p2 = ideal_of_independent_sets(make_graph(2, {{1, 2}}));
  CHECK(render_all(p2.ideal.generators()) ==
        std::vector<std::string>{"t1*t2", "s1*t2", "s2*t1"});

  auto k1 = ideal_of_independent_sets(Graph(1));
  CHECK(render_all(k1.ideal.generators()) == std::vector<std::string>{"t1", "s1"});

  auto p3 = ideal_of_independent_sets(make_graph(3, {{1, 2}, {2, 3}}));
  REQUIRE(p3.ideal.size() == 5);
  CHECK(p3.ideal.generators().front().render() == "t1*t2*t3");
  CHECK(p3.ideal.generators().back().render() == "s1*s3*t2");
  CHECK(p3.order[0].set.none());
}

TEST_CASE("all generators have degree n and distinct s-parts") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = testutil::random_graph(6, 0.35, rng);
    auto [ideal, order] = ideal_of_independent_sets(g);
    for (const auto& m : ideal.generators()) {
      CHECK(m.degree() == g.vertex_count());
      CHECK(!m.s_mask.intersects(m.t_mask));
      CHECK((m.s_mask | m.t_mask) == Bitset::full(g.vertex_count()));
    }
    // the order is strictly descending, so no two generators tie
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      CHECK(generator_order_precedes(order[i].monomial, order[i + 1].monomial));
      CHECK(!generator_order_precedes(order[i + 1].monomial, order[i].monomial));
    }
  }
}

TEST_CASE("divisibility on masks") {
  CHECK(monomial_divides(mono(2, {}, {1}), mono(2, {}, {1, 2})));
  CHECK(!monomial_divides(mono(2, {1}, {}), mono(2, {}, {1})));
  auto m = mono(2, {1}, {2});
  CHECK(monomial_divides(m, m));
}

TEST_CASE("colon by a monomial") {
  // (t1t2) : s1t2 = (t1)
  auto i1 = MonomialIdeal::from_minimal({mono(2, {}, {1, 2})});
  CHECK(render_all(colon_by_monomial(i1, mono(2, {1}, {2})).generators()) ==
        std::vector<std::string>{"t1"});

  // (t1t2, s1t2) : s2t1 = (t2)
  auto i2 = MonomialIdeal::from_minimal({mono(2, {}, {1, 2}), mono(2, {1}, {2})});
  CHECK(render_all(colon_by_monomial(i2, mono(2, {2}, {1})).generators()) ==
        std::vector<std::string>{"t2"});

  // (m) : m is the unit ideal
  auto i3 = MonomialIdeal::from_minimal({mono(2, {1}, {2})});
  CHECK(colon_by_monomial(i3, mono(2, {1}, {2})).is_unit());
}

TEST_CASE("minimalize removes multiples and duplicates") {
  auto kept = minimalize({mono(2, {1}, {2}), mono(2, {}, {2}), mono(2, {1}, {2}),
                          mono(2, {1}, {1, 2})});
  CHECK(render_all(kept) == std::vector<std::string>{"t2"});

  // the unit monomial absorbs everything
  auto unit = minimalize({mono(2, {}, {}), mono(2, {1}, {})});
  CHECK(render_all(unit) == std::vector<std::string>{"1"});
}

TEST_CASE("linear quotients hold on P_2, with the exact colon variables") {
  auto [ideal, order] = ideal_of_independent_sets(make_graph(2, {{1, 2}}));
  auto report = verify_linear_quotients(order);
  CHECK(report.passed());
  CHECK(report.checked == 2);

  std::vector<SquarefreeMonomial> prefix = {order[0].monomial};
  CHECK(render_all(colon_generators(prefix, order[1].monomial)) ==
        std::vector<std::string>{"t1"});
  prefix.push_back(order[1].monomial);
  CHECK(render_all(colon_generators(prefix, order[2].monomial)) ==
        std::vector<std::string>{"t2"});
}

TEST_CASE("linear quotients hold exhaustively on small graphs") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& g : testutil::all_labeled_graphs(n))
      CHECK(verify_linear_quotients(ideal_of_independent_sets(g).order).passed());

  std::mt19937_64 rng(40917);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testutil::random_graph(5 + trial % 2, 0.1 + 0.08 * (trial % 10), rng);
    CAPTURE(trial);
    CHECK(verify_linear_quotients(ideal_of_independent_sets(g).order).passed());
  }
}

TEST_CASE("parallel quotient verification is deterministic") {
  Graph g = build_family({FamilyKind::cycle, 7});
  auto order = ideal_of_independent_sets(g).order;
  auto seq = verify_linear_quotients(order, 1);
  auto par = verify_linear_quotients(order, 4);
  CHECK(seq.passed());
  CHECK(seq.checked == par.checked);
  CHECK(seq.violations == par.violations);
}

TEST_CASE("set sizes follow the independent-set cardinalities") {
  auto p2 = ideal_of_independent_sets(make_graph(2, {{1, 2}}));
  CHECK(set_sizes(p2.order) == std::vector<std::size_t>{0, 1, 1});

  auto p3 = ideal_of_independent_sets(make_graph(3, {{1, 2}, {2, 3}}));
  CHECK(set_sizes(p3.order) == std::vector<std::size_t>{0, 1, 1, 1, 2});

  auto k4 = ideal_of_independent_sets(build_family({FamilyKind::complete, 4}));
  CHECK(set_sizes(k4.order) == std::vector<std::size_t>{0, 1, 1, 1, 1});
}

TEST_CASE("set-size histogram equals the coefficient vector") {
  std::mt19937_64 rng(8812);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = testutil::random_graph(6, 0.3, rng);
    auto order = ideal_of_independent_sets(g).order;
    auto poly = independence_polynomial(g);
    std::vector<BigInt> histogram(poly.alpha() + 1, 0);
    for (auto s : set_sizes(order)) ++histogram[s];
    CHECK(histogram == poly.coeffs);
  }
}

TEST_CASE("colon generators agree with definitional membership") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 2; n <= 4; ++n) {
    Graph g = testutil::random_graph(n, 0.4, rng);
    auto [ideal, order] = ideal_of_independent_sets(g);
    const auto& m = order[order.size() / 2].monomial;
    auto colon = colon_by_monomial(ideal, m);
    // every w over the 2n <= 8 variables
    for (std::uint64_t sm = 0; sm < (std::uint64_t{1} << n); ++sm)
      for (std::uint64_t tm = 0; tm < (std::uint64_t{1} << n); ++tm) {
        Bitset s(n), t(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (sm >> i & 1) s.set(i);
          if (tm >> i & 1) t.set(i);
        }
        SquarefreeMonomial w(s, t);
        bool in_colon = colon.contains(w);
        bool by_membership = ideal.contains(w.squarefree_product(m));
        CHECK(in_colon == by_membership);
      }
  }
}
