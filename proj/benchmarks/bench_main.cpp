#include <benchmark/benchmark.h>

#include <vector>

#include "vantage/compare.hpp"
#include "vantage/constructions.hpp"
#include "vantage/enumeration.hpp"
#include "vantage/geometry.hpp"
#include "vantage/six_point.hpp"
#include "vantage/witnesses.hpp"

using namespace vantage;

static VantageMultiset spread_vantage(std::size_t k, std::size_t d) {
  VantageMultiset v(d, {});
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rational> c;
    for (std::size_t a = 0; a < d; ++a) c.emplace_back(static_cast<long>((i * 7 + a * 3) % 11) - 5);
    v.add(Point(c));
  }
  return v;
}

static void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const CandidateSet c = generic_points(n, 2, 7);
  const VantageMultiset v = spread_vantage(k, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rank(c, v));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Rank)->Args({8, 1})->Args({8, 3})->Args({32, 3})->Args({32, 8})->Unit(benchmark::kMicrosecond);

// Near-equal radical sums force interval refinement.
static void BM_CompareClose(benchmark::State& state) {
  const RadicalSum a = RadicalSum::sqrt(2) + RadicalSum::sqrt(3);
  const RadicalSum b = RadicalSum::sqrt(5) + RadicalSum::sqrt(Rational(1, 1000000));
  for (auto _ : state) benchmark::DoNotOptimize(compare(a, b));
}
BENCHMARK(BM_CompareClose);

static void BM_CompareSymbolicZero(benchmark::State& state) {
  const RadicalSum a = RadicalSum::sqrt(8) + RadicalSum::sqrt(18);
  const RadicalSum b = RadicalSum::sqrt(50);
  for (auto _ : state) benchmark::DoNotOptimize(compare(a, b));
}
BENCHMARK(BM_CompareSymbolicZero);

static void BM_EnumeratePsi1Planar(benchmark::State& state) {
  const CandidateSet c = generic_points(static_cast<std::size_t>(state.range(0)), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_psi1_exact(c).size());
}
BENCHMARK(BM_EnumeratePsi1Planar)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_EstimatePsi(benchmark::State& state) {
  const CandidateSet c = generic_points(5, 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_psi(c, 1, SamplerSpec{}, static_cast<std::uint64_t>(state.range(0)), 1, 1).size());
  }
}
BENCHMARK(BM_EstimatePsi)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_SixPointGrid(benchmark::State& state) {
  const Rational step(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_six_point(step, Rational(5, 2), 1).pass);
}
BENCHMARK(BM_SixPointGrid)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_WitnessD1(benchmark::State& state) {
  std::vector<Point> pts;
  const auto n = static_cast<long>(state.range(0));
  for (long i = 0; i < n; ++i) pts.push_back(Point{Rational(i * i + 1)});
  const CandidateSet c(1, pts);
  const std::vector<Ordering> orders = protrusive_orderings_d1(c);
  std::size_t next = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(witness_d1(c, orders[next]).verified);
    next = (next + 1) % orders.size();
  }
}
BENCHMARK(BM_WitnessD1)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
