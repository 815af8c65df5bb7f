#include <benchmark/benchmark.h>

#include "kcut/complex.hpp"
#include "kcut/graph.hpp"
#include "kcut/homology.hpp"
#include "kcut/morse.hpp"
#include "kcut/shelling.hpp"

using namespace kcut;

static void BM_ConnectedKSubsets(benchmark::State& state) {
  Graph g = grid_graph(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(connected_k_subsets(g, 4));
}
BENCHMARK(BM_ConnectedKSubsets)->Arg(3)->Arg(4)->Arg(5);

static void BM_CutComplex(benchmark::State& state) {
  Graph g = squared_path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cut_complex(g, 4).facet_count());
}
BENCHMARK(BM_CutComplex)->Arg(9)->Arg(11)->Arg(13);

static void BM_FaceEnumeration(benchmark::State& state) {
  Graph g = squared_path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Complex c = cut_complex(g, 4);
    benchmark::DoNotOptimize(c.face_count());
  }
}
BENCHMARK(BM_FaceEnumeration)->Arg(9)->Arg(11);

static void BM_HomologyRational(benchmark::State& state) {
  Complex c = cut_complex(squared_path_graph(static_cast<int>(state.range(0))), 4);
  for (auto _ : state) benchmark::DoNotOptimize(homology_profile(c, false).betti);
}
BENCHMARK(BM_HomologyRational)->Arg(8)->Arg(9)->Arg(10);

static void BM_HomologyWithTorsion(benchmark::State& state) {
  Complex c = cut_complex(squared_path_graph(static_cast<int>(state.range(0))), 4);
  for (auto _ : state) benchmark::DoNotOptimize(homology_profile(c, true).torsion);
}
BENCHMARK(BM_HomologyWithTorsion)->Arg(8)->Arg(9);

static void BM_VerifyShelling(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Complex c = cut_complex(squared_path_graph(n), 3);
  std::vector<Mask> order = squared_path_shelling(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_shelling(c, order).ok);
}
BENCHMARK(BM_VerifyShelling)->Arg(9)->Arg(11)->Arg(13);

static void BM_FindShelling(benchmark::State& state) {
  Complex c = cut_complex(grid_graph(2, static_cast<int>(state.range(0))), 3);
  ShellingSearchOptions opts;
  opts.max_facets = 64;
  for (auto _ : state) benchmark::DoNotOptimize(find_shelling(c, opts).status);
}
BENCHMARK(BM_FindShelling)->Arg(3)->Arg(4);

static void BM_GridMorseMatching(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(grid_delta4_matching(2, n).pairs.size());
}
BENCHMARK(BM_GridMorseMatching)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
