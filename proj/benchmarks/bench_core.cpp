#include <benchmark/benchmark.h>

#include <vector>

#include "bicomb/barycenter.hpp"
#include "bicomb/dynamics.hpp"
#include "bicomb/isometry.hpp"
#include "bicomb/measure.hpp"
#include "bicomb/sparse_seq.hpp"
#include "bicomb/space.hpp"
#include "bicomb/wasserstein.hpp"

using namespace bicomb;

namespace {

std::vector<Point> random_points(const Space& s, int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) out.push_back(s.random_point(rng));
  return out;
}

Space space_for(int kind) {
  switch (kind) {
    case 0: return Space::euclidean(2);
    case 1: return Space::star_seq(-4, 4);
    default: return Space::tree({1, 1, 1});
  }
}

}  // namespace

// b_n on n distinct points. Arg 0: space (0 plane, 1 star-seq, 2 tree), arg 1: n.
void BM_BnDistinct(benchmark::State& st) {
  Space s = space_for(static_cast<int>(st.range(0)));
  auto pts = random_points(s, static_cast<int>(st.range(1)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(b_n(s, pts));
}
BENCHMARK(BM_BnDistinct)->ArgsProduct({{0, 1, 2}, {3, 4, 5, 6}})->Unit(benchmark::kMillisecond);

// b_{2m} on m points, each repeated twice.
void BM_BnRepeated(benchmark::State& st) {
  Space s = space_for(static_cast<int>(st.range(0)));
  auto base = random_points(s, static_cast<int>(st.range(1)), 2);
  std::vector<Point> pts;
  for (const auto& p : base)
    for (int i = 0; i < 2; ++i) pts.push_back(p);
  for (auto _ : st) benchmark::DoNotOptimize(b_n(s, pts));
}
BENCHMARK(BM_BnRepeated)->ArgsProduct({{0, 1, 2}, {2, 3, 4}})->Unit(benchmark::kMillisecond);

void BM_BetaQuarters(benchmark::State& st) {
  Space s = Space::euclidean(3);
  auto pts = random_points(s, 4, 3);
  AtomicMeasure mu = AtomicMeasure::uniform(s, pts);
  for (auto _ : st) benchmark::DoNotOptimize(beta(mu));
}
BENCHMARK(BM_BetaQuarters)->Unit(benchmark::kMillisecond);

void BM_W1Uniform(benchmark::State& st) {
  Space s = Space::euclidean(2);
  const int n = static_cast<int>(st.range(0));
  auto xs = random_points(s, n, 4), ys = random_points(s, n, 5);
  for (auto _ : st) benchmark::DoNotOptimize(w1_uniform(s, xs, ys));
  st.SetComplexityN(n);
}
BENCHMARK(BM_W1Uniform)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_W1Atomic(benchmark::State& st) {
  Space s = Space::star_seq(-4, 4);
  const int n = static_cast<int>(st.range(0));
  AtomicMeasure mu = AtomicMeasure::uniform(s, random_points(s, n, 6));
  AtomicMeasure nu = AtomicMeasure::uniform(s, random_points(s, n + 1, 7));
  for (auto _ : st) benchmark::DoNotOptimize(w1_atomic(mu, nu));
}
BENCHMARK(BM_W1Atomic)->RangeMultiplier(2)->Range(4, 32);

void BM_StarNorm(benchmark::State& st) {
  Space s = Space::star_seq(-64, 64);
  auto pts = random_points(s, 256, 8);
  for (auto _ : st)
    for (const auto& p : pts) benchmark::DoNotOptimize(star_norm(std::get<SparseSeq>(p)));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(pts.size()));
}
BENCHMARK(BM_StarNorm);

void BM_DensityEstimate(benchmark::State& st) {
  const std::int64_t k = st.range(0);
  std::vector<std::uint8_t> visits(static_cast<std::size_t>(2 * k + 1));
  for (std::size_t i = 0; i < visits.size(); i += 3) visits[i] = 1;
  for (auto _ : st) benchmark::DoNotOptimize(banach_density_estimate(visits, k, k));
}
BENCHMARK(BM_DensityEstimate)->RangeMultiplier(10)->Range(100, 100000);

void BM_RotationOrbit(benchmark::State& st) {
  Space s = Space::euclidean(2);
  Isometry rot = Isometry::rotation_turns(ratio(1, 7));
  Point x0 = EuclidPoint{{1.0, 0.0}};
  for (auto _ : st) benchmark::DoNotOptimize(orbit(s, rot, x0, st.range(0)));
}
BENCHMARK(BM_RotationOrbit)->Arg(1000)->Arg(10000);
BENCHMARK_MAIN();
