#include <benchmark/benchmark.h>

#include "lrcone/conegen.hpp"
#include "lrcone/oracle.hpp"
#include "lrcone/torusgit.hpp"

using namespace lrcone;

namespace {

const char* kTypes[] = {"A1", "A2", "B2", "G2", "A3", "B3"};

void BM_Facets(benchmark::State& state) {
  CartanType t = CartanType::parse(kTypes[state.range(0)]);
  for (auto _ : state) {
    ConeEngine engine(t, 2);
    benchmark::DoNotOptimize(engine.facets().facets.size());
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_Facets)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_SchubertTable(benchmark::State& state) {
  RootSystem rs(CartanType::parse(kTypes[state.range(0)]));
  for (auto _ : state) {
    FlagSpace fs(Parabolic(rs, {}));
    fs.build_table();
    benchmark::DoNotOptimize(fs.has_table());
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_SchubertTable)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_OracleMember(benchmark::State& state) {
  RootSystem rs(CartanType::parse("A2"));
  RepOracle o(rs);
  std::vector<Weight> w = {Weight{{3, 1}}, Weight{{2, 2}}, Weight{{1, 3}}};
  for (auto _ : state) benchmark::DoNotOptimize(o.cone_member(w, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_OracleMember)->Arg(1)->Arg(2)->Arg(4);

void BM_IrredundancyLp(benchmark::State& state) {
  ConeEngine engine(CartanType::parse(kTypes[state.range(0)]), 2);
  ConeDescription d = engine.facets();
  for (auto _ : state) benchmark::DoNotOptimize(irredundancy_report(d).size());
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_IrredundancyLp)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_NumericalCriterion(benchmark::State& state) {
  RootSystem rs(CartanType::parse("B3"));
  WeightedSupport x(rs, {Weight{{1, 2, 0}}, Weight{{2, -1, 1}}, Weight{{0, 3, -2}}, Weight{{3, 0, 1}}});
  for (auto _ : state) benchmark::DoNotOptimize(numerical_criterion(x).signed_square);
}
BENCHMARK(BM_NumericalCriterion);

}  // namespace
BENCHMARK_MAIN();
