#include "binform/area.hpp"
#include "binform/arith.hpp"
#include "binform/forms.hpp"
#include "binform/thue.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace binform;

void BM_OddBinomialGcd(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(odd_binomial_gcd(n));
}
BENCHMARK(BM_OddBinomialGcd)->RangeMultiplier(4)->Range(32, 2048);

void BM_Discriminant(benchmark::State& state) {
  const auto f = fstar_coefficients(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(f));
}
BENCHMARK(BM_Discriminant)->DenseRange(4, 16, 4);

void BM_AreaPolar(benchmark::State& state) {
  const auto f = fstar_coefficients(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(area_polar(f));
}
BENCHMARK(BM_AreaPolar)->DenseRange(3, 12, 3);

void BM_AreaLine(benchmark::State& state) {
  const auto f = fstar_coefficients(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(area_line(f));
}
BENCHMARK(BM_AreaLine)->DenseRange(3, 12, 3);

void BM_CountThueCubic(benchmark::State& state) {
  const auto f = sn_coefficients(3);
  const double area = area_sn_closed(3);
  const auto h = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_thue(f, h, area));
}
BENCHMARK(BM_CountThueCubic)->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond);

void BM_CountThueThreads(benchmark::State& state) {
  const auto f = sn_coefficients(3);
  const double area = area_sn_closed(3);
  const ThueOptions opts{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(count_thue(f, 100000, area, opts));
}
BENCHMARK(BM_CountThueThreads)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
