#include <random>

#include <benchmark/benchmark.h>

#include "r4embed/embed.hpp"
#include "r4embed/homology.hpp"
#include "r4embed/presentation.hpp"
#include "r4embed/verify.hpp"

namespace {

using namespace r4embed;

IntegerMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-10, 10);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

void BM_snf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntegerMatrix m = random_matrix(n, 7);
  for (auto _ : state) {
    auto r = smith_normal_form(m);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_snf)->Arg(4)->Arg(6)->Arg(8);

void BM_realize(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  const Presentation p =
      parse_presentation("<a ; a^" + std::to_string(k) + ">");
  for (auto _ : state) {
    auto rc = realize(p);
    benchmark::DoNotOptimize(rc);
  }
}
BENCHMARK(BM_realize)->Arg(8)->Arg(32)->Arg(128);

void BM_verify(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  const RealizedComplex rc =
      realize(parse_presentation("<a ; a^" + std::to_string(k) + ">"));
  CheckOptions opts;
  opts.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto rep = check_embedding(rc, opts);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_verify)->Args({8, 1})->Args({16, 1})->Args({16, 4});

void BM_homology(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  const RealizedComplex rc =
      realize(parse_presentation("<a ; a^" + std::to_string(k) + ">"));
  for (auto _ : state) {
    auto h = homology_groups(rc.complex);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_homology)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
