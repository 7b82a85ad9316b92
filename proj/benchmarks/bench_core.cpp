#include <benchmark/benchmark.h>

#include "indideal/graph.hpp"
#include "indideal/ideal.hpp"
#include "indideal/indep.hpp"
#include "indideal/invariants.hpp"
#include "indideal/oracle.hpp"

using namespace indideal;

static void BM_CountPath(benchmark::State& state) {
  Graph g = build_family({FamilyKind::path, state.range(0)});
  for (auto _ : state) {
    auto poly = independence_polynomial(g);
    benchmark::DoNotOptimize(poly);
  }
}
BENCHMARK(BM_CountPath)->Arg(25)->Arg(100)->Arg(400);

static void BM_CountCyclePower(benchmark::State& state) {
  Graph g = build_family({FamilyKind::cycle_power, state.range(0), 2});
  for (auto _ : state) {
    auto poly = independence_polynomial(g);
    benchmark::DoNotOptimize(poly);
  }
}
BENCHMARK(BM_CountCyclePower)->Arg(18)->Arg(40);

static void BM_EnumerateCycle(benchmark::State& state) {
  Graph g = build_family({FamilyKind::cycle, state.range(0)});
  for (auto _ : state) {
    std::size_t emitted = 0;
    IndependentSetEnumerator it(g);
    while (it.next()) ++emitted;
    benchmark::DoNotOptimize(emitted);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EnumerateCycle)->Arg(14)->Arg(20);

static void BM_VerifyLinearQuotients(benchmark::State& state) {
  Graph g = build_family({FamilyKind::path, state.range(0)});
  auto order = ideal_of_independent_sets(g).order;
  for (auto _ : state) {
    auto report = verify_linear_quotients(order);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_VerifyLinearQuotients)->Arg(8)->Arg(12);

static void BM_BettiOracle(benchmark::State& state) {
  Graph g = build_family({FamilyKind::path, state.range(0)});
  auto ideal = ideal_of_independent_sets(g).ideal;
  for (auto _ : state) {
    auto table = betti_table_oracle(ideal);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_BettiOracle)->Arg(3)->Arg(5);

static void BM_DualSearch(benchmark::State& state) {
  Graph g = build_family({FamilyKind::cycle, state.range(0)});
  for (auto _ : state) {
    auto status = dual_has_linear_resolution(g);
    benchmark::DoNotOptimize(status);
  }
}
BENCHMARK(BM_DualSearch)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
