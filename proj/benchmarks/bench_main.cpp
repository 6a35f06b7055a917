#include <benchmark/benchmark.h>

#include <random>

#include "unconv/gallery.hpp"
#include "unconv/limit_set.hpp"

using namespace unconv;

namespace {

PadicInt make_value(std::uint64_t p, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_padic(rng, p, k);
}

void BM_padic_mul(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  PadicInt a = make_value(3, k, 1);
  PadicInt b = make_value(3, k, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_padic_mul)->Arg(12)->Arg(64)->Arg(256);

void BM_unit_inverse(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  PadicInt a = make_value(3, k, 3);
  if (a.digit(0) == 0) a = a + PadicInt::one(3, k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.unit_inverse());
  }
}
BENCHMARK(BM_unit_inverse)->Arg(12)->Arg(64);

void BM_component_map_depth8(benchmark::State& state) {
  PxSystem px = make_px_system(3, 12);
  IndexFamily plain = plain_family(2);
  SymbolWord w({1, 2, 2, 1, 1, 2, 1, 2}, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(component_map(px.system, plain.entry(1, 1), w, 8));
  }
}
BENCHMARK(BM_component_map_depth8);

void BM_lambda0_point_depth8(benchmark::State& state) {
  PxSystem px = make_px_system(3, 12);
  IndexFamily fam = parity_family(XiMatrix::for_case(4));
  SymbolWord w({1, 2, 2, 1, 1, 2, 1, 2}, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda0_point(px.system, fam, w, 8));
  }
}
BENCHMARK(BM_lambda0_point_depth8);

void BM_enumerate(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  PxSystem px = make_px_system(3, 12);
  IndexFamily fam = parity_family(XiMatrix::for_case(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_lambda0(px.system, fam, depth, 1 << 20));
  }
}
BENCHMARK(BM_enumerate)->Arg(4)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
