#include <benchmark/benchmark.h>

#include <vector>

#include "cluster_lattice/circle.hpp"
#include "cluster_lattice/noncrossing.hpp"
#include "cluster_lattice/serialization.hpp"
#include "cluster_lattice/thick.hpp"
#include "cluster_lattice/ts_lattice.hpp"
#include "cluster_lattice/tstructure.hpp"
#include "cluster_lattice/window_oracle.hpp"

using namespace cluster_lattice;

namespace {

void BM_EnumerateNC(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long count = 0;
    for_each_nc(n, [&](const Partition&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateNC)->DenseRange(6, 12, 2);

void BM_Kreweras(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto all = nc_enumerate(n);
  for (auto _ : state) {
    for (const auto& p : all) benchmark::DoNotOptimize(kreweras(p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(BM_Kreweras)->Arg(6)->Arg(9);

void BM_NCMeetJoin(benchmark::State& state) {
  const auto all = nc_enumerate(6);
  for (auto _ : state) {
    for (std::size_t i = 0; i < all.size(); i += 7)
      for (std::size_t j = 0; j < all.size(); j += 5) {
        benchmark::DoNotOptimize(meet(all[i], all[j]));
        benchmark::DoNotOptimize(join(all[i], all[j]));
      }
  }
}
BENCHMARK(BM_NCMeetJoin);

void BM_Approximation(benchmark::State& state) {
  const auto ts = parse_tstructure("1,3|2|4,5,6@1:0,a2,3:0,4:0,a6,6:0");
  const auto arcs = window_arcs(ts.model(), Window{3});
  for (auto _ : state) {
    for (const auto& a : arcs) benchmark::DoNotOptimize(approx_triangle(ts, a));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(arcs.size()));
}
BENCHMARK(BM_Approximation);

void BM_ThickGenerated(benchmark::State& state) {
  const ModelParams model(6);
  const auto seeds = parse_arc_list("[1:0,3:0];[2:1,5:-2];[4:0,6:3]");
  for (auto _ : state) benchmark::DoNotOptimize(thick_generated(seeds, model));
}
BENCHMARK(BM_ThickGenerated);

void BM_WindowAisleClosure(benchmark::State& state) {
  const ModelParams model(3);
  const auto seeds = parse_arc_list("[1:0,2:0];[2:1,3:-1]");
  const Window w{static_cast<Offset>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(window_aisle_closure(seeds, w, model));
}
BENCHMARK(BM_WindowAisleClosure)->Arg(3)->Arg(5);

void BM_WindowThickClosure(benchmark::State& state) {
  const ModelParams model(3);
  const auto seeds = parse_arc_list("[1:0,2:0]");
  const Window w{static_cast<Offset>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(window_thick_closure(seeds, w, model));
}
BENCHMARK(BM_WindowThickClosure)->Arg(3)->Arg(5);

void BM_EquivLattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(equiv_lattice(n));
}
BENCHMARK(BM_EquivLattice)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
