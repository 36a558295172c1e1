#include <benchmark/benchmark.h>

#include <boolcov/disk_union.hpp>
#include <boolcov/simulator.hpp>

#include <vector>

using namespace boolcov;

namespace {

// Deterministic dense scene: n disks of radius ~1 in a 20x20 window.
std::vector<Disk> make_scene(int n) {
  ReplicateRng rng(1234, static_cast<std::uint64_t>(n));
  std::vector<Disk> disks;
  disks.reserve(n);
  for (int i = 0; i < n; ++i)
    disks.push_back({{rng.uniform(-2.0, 22.0), rng.uniform(-2.0, 22.0)},
                     rng.uniform(0.6, 1.4)});
  return disks;
}

const Rect win{0.0, 0.0, 20.0, 20.0};

} // namespace

static void BM_DiskUnionExact(benchmark::State& state) {
  auto disks = make_scene(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(disk_union_functionals(disks, win));
}
BENCHMARK(BM_DiskUnionExact)->Arg(64)->Arg(256)->Arg(1024);

static void BM_DiskUnionGrid(benchmark::State& state) {
  auto disks = make_scene(256);
  int res = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(disk_union_grid(disks, win, res));
}
BENCHMARK(BM_DiskUnionGrid)->Arg(16)->Arg(64);

static void BM_SampleScene(benchmark::State& state) {
  SimulationConfig cfg;
  cfg.params = ModelParams::make(2, 0.5);
  cfg.window = Window::cube(2, 20.0);
  cfg.replicates = 2;
  long rep = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_scene(cfg, rep++ % 1000));
}
BENCHMARK(BM_SampleScene);

BENCHMARK_MAIN();
