#include <benchmark/benchmark.h>

#include "tutte/catalog.hpp"
#include "tutte/engines.hpp"
#include "tutte/families.hpp"

using namespace tutte;

namespace {

void BM_SubsetComplete(benchmark::State& state) {
  const Matroid m = graphic_matroid(graphs::complete(static_cast<unsigned>(state.range(0))));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tutte_subset(m, threads));
}
BENCHMARK(BM_SubsetComplete)->Args({5, 1})->Args({6, 1})->Args({6, 0})->Unit(benchmark::kMillisecond);

void BM_DcGraphComplete(benchmark::State& state) {
  const Graph g = graphs::complete(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tutte_dc(g));
}
BENCHMARK(BM_DcGraphComplete)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_DcGraphGrid(benchmark::State& state) {
  const Graph g = graphs::grid(3, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tutte_dc(g));
}
BENCHMARK(BM_DcGraphGrid)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_TransferGrid(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transfer_grid(3, n));
}
BENCHMARK(BM_TransferGrid)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

// Catalog entries by index so the report shows the size in the argument.
void BM_DcCatalog(benchmark::State& state) {
  const CatalogEntry& e = catalog().at(static_cast<std::size_t>(state.range(0)));
  const Matroid m = e.build();
  state.SetLabel(e.name);
  for (auto _ : state) benchmark::DoNotOptimize(tutte_dc(m));
}
BENCHMARK(BM_DcCatalog)->DenseRange(0, 47, 6)->Unit(benchmark::kMicrosecond);

void BM_ActivitiesWitt(benchmark::State& state) {
  const Matroid m = lookup("S(5,6,12)").build();
  for (auto _ : state) benchmark::DoNotOptimize(tutte_activities(m));
}
BENCHMARK(BM_ActivitiesWitt)->Unit(benchmark::kMillisecond);

void BM_CoboundaryPG23(benchmark::State& state) {
  const Matroid m = lookup("PG23").build();
  for (auto _ : state) benchmark::DoNotOptimize(coboundary(m));
}
BENCHMARK(BM_CoboundaryPG23)->Unit(benchmark::kMillisecond);

void BM_CompleteGraphFormula(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(families::complete_graph(n));
}
BENCHMARK(BM_CompleteGraphFormula)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_VerifyCatalog(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& e : catalog()) benchmark::DoNotOptimize(verify(e));
  }
}
BENCHMARK(BM_VerifyCatalog)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
