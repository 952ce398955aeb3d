#include <benchmark/benchmark.h>

#include <random>

#include "minkin/numsolve/scattering.hpp"
#include "minkin/numsolve/tracker.hpp"

using namespace minkin;

namespace {

struct Fixture {
  LogPotential potential;
  std::vector<CVec> starts;
  std::vector<Leg> legs;
};

// Full-support n-point potential, its (n-3)! critical points at a random
// real weight vector, and one leg to a random complex weight vector.
const Fixture& fixture(int n) {
  static std::map<int, Fixture> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Pair> support;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) support.push_back({i, j});
  MandelstamPoint s(n);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(1, 99);
  for (Pair e : support) s.set(e, BigRational(d(rng)));
  NumSolveConfig cfg;
  cfg.seed = 3;
  CriticalPointSet set = solve_critical(support, s, cfg);
  LogPotential p = gr2_potential(n, support);
  CVec from(p.terms()), to(p.terms());
  std::normal_distribution<double> g;
  for (std::size_t k = 0; k < p.terms(); ++k) {
    from[k] = s(parse_pair_label(p.labels()[k])).get_d();
    to[k] = {g(rng), g(rng)};
  }
  // Repeat the points so each batch has enough paths to share.
  std::vector<CVec> starts;
  for (int r = 0; r < 8; ++r) starts.insert(starts.end(), set.points.begin(), set.points.end());
  return cache.emplace(n, Fixture{p, starts, {{from, to}, {to, from}}}).first->second;
}

void BM_TrackSerial(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)));
  TrackerOptions opt;
  for (auto _ : state) benchmark::DoNotOptimize(track_batch_serial(f.potential, f.starts, f.legs, opt));
  state.counters["paths"] = static_cast<double>(f.starts.size());
}

void BM_TrackParallel(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)));
  TrackerOptions opt;
  for (auto _ : state) benchmark::DoNotOptimize(track_batch_parallel(f.potential, f.starts, f.legs, opt));
  state.counters["paths"] = static_cast<double>(f.starts.size());
}

}  // namespace

BENCHMARK(BM_TrackSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TrackParallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
