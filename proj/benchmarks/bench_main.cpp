#include <benchmark/benchmark.h>

#include <memory>

#include "shortcut/bs12_verify.hpp"
#include "shortcut/cayley.hpp"
#include "shortcut/cycle_search.hpp"
#include "shortcut/disk_diagram.hpp"
#include "shortcut/shortcut_analysis.hpp"
#include "shortcut/wall_cycle.hpp"

using namespace shortcut;
using namespace shortcut::graphs;

namespace {

void BM_DistanceOracleGrid(benchmark::State& state) {
  const Graph g = grid(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    DistanceOracle m(g);
    benchmark::DoNotOptimize(m.diameter());
  }
  state.SetComplexityN(static_cast<std::int64_t>(g.vertex_count()));
}
BENCHMARK(BM_DistanceOracleGrid)->Arg(5)->Arg(10)->Arg(20)->Complexity();

void BM_IsometricSearchGrid(benchmark::State& state) {
  const Graph g = grid(5, 5);
  const DistanceOracle m(g);
  SearchOptions opts;
  for (auto _ : state) {
    auto r = search_cycles(m, static_cast<std::size_t>(state.range(0)), opts);
    benchmark::DoNotOptimize(r.cycles.size());
  }
}
BENCHMARK(BM_IsometricSearchGrid)->DenseRange(4, 10, 2);

void BM_ShortcutCertificateHypercube(benchmark::State& state) {
  const Graph g = hypercube(static_cast<std::size_t>(state.range(0)));
  const DistanceOracle m(g);
  for (auto _ : state) {
    auto r = shortcut_certificate(m, 2 * m.diameter() + 1);
    benchmark::DoNotOptimize(r.theta);
  }
}
BENCHMARK(BM_ShortcutCertificateHypercube)->DenseRange(3, 5);

void BM_DiskDiagramGridBoundary(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const Graph g = grid(k + 1, k + 1);
  const DistanceOracle m(g);
  // Boundary of the k x k square, counter-clockwise from the origin.
  std::vector<VertexId> walk;
  auto id = [&](std::size_t x, std::size_t y) { return static_cast<VertexId>(y * (k + 1) + x); };
  for (std::size_t x = 0; x < k; ++x) walk.push_back(id(x, 0));
  for (std::size_t y = 0; y < k; ++y) walk.push_back(id(k, y));
  for (std::size_t x = k; x > 0; --x) walk.push_back(id(x, k));
  for (std::size_t y = k; y > 0; --y) walk.push_back(id(0, y));
  const CycleInGraph c(g, walk);
  FillingParams p;
  p.theta = 4;
  p.max_length = walk.size();
  for (auto _ : state) {
    auto d = build_disk_diagram(m, c, p);
    benchmark::DoNotOptimize(d.area());
  }
}
BENCHMARK(BM_DiskDiagramGridBoundary)->DenseRange(2, 5);

void BM_WallCycleExhaustive(benchmark::State& state) {
  WallVerifyOptions opts;
  opts.max_len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto r = verify_wallcycle_theorem(opts);
    benchmark::DoNotOptimize(r.candidates);
  }
}
BENCHMARK(BM_WallCycleExhaustive)->DenseRange(8, 12, 2);

void BM_BS12Ball(benchmark::State& state) {
  for (auto _ : state) {
    auto b = cayley_ball(BS12Spec::standard(), static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(b.size());
  }
}
BENCHMARK(BM_BS12Ball)->DenseRange(6, 10, 2);

void BM_BS12MitmDistance(benchmark::State& state) {
  const BS12Ball ball = cayley_ball(BS12Spec::standard(), 5);
  const BS12Element far = evaluate(parse_word("t t a T a T a t a T"));
  for (auto _ : state) benchmark::DoNotOptimize(group_distance_mitm(ball, BS12Element{}, far));
}
BENCHMARK(BM_BS12MitmDistance);

void BM_VerifyBss(benchmark::State& state) {
  for (auto _ : state) {
    auto r = verify_bss(static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(r.holds());
  }
}
BENCHMARK(BM_VerifyBss)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_GeodesicLemmas(benchmark::State& state) {
  for (auto _ : state) {
    auto r = verify_geodesic_lemmas(static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(r.holds());
  }
}
BENCHMARK(BM_GeodesicLemmas)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
