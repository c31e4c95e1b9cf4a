#include <benchmark/benchmark.h>

#include <random>

#include "lcann/ext.hpp"
#include "lcann/groebner.hpp"
#include "lcann/io.hpp"
#include "lcann/smith.hpp"

using namespace lcann;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-9, 9);
  IntMatrix m(n, n + 2);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n + 2; ++c) m(r, c) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

static void BM_ReisnerStrandScan(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ExtCalculator calc(reisner_ideal());  // fresh cache each round
    benchmark::DoNotOptimize(ext_support_scan(calc, j, DegreeBox::cube(6, -1, 0)));
  }
}
BENCHMARK(BM_ReisnerStrandScan)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_GroebnerKatsura4(benchmark::State& state) {
  std::vector<RatPoly> gens;
  for (const char* s : {"x1 + 2*x2 + 2*x3 + 2*x4 - 1", "x1^2 + 2*x2^2 + 2*x3^2 + 2*x4^2 - x1",
                        "2*x1*x2 + 2*x2*x3 + 2*x3*x4 - x2", "x2^2 + 2*x1*x3 + 2*x2*x4 - x3"})
    gens.push_back(parse_polynomial(s, 4, 1));
  const auto characteristic = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(groebner(gens, characteristic));
}
BENCHMARK(BM_GroebnerKatsura4)->Arg(32003)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
