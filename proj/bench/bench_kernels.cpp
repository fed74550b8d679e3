#include <benchmark/benchmark.h>

#include <random>

#include "gensub/construct.hpp"
#include "gensub/judge.hpp"
#include "gensub/kernels.hpp"
#include "gensub/types.hpp"

namespace {

using gensub::BitMatrix;
namespace kernels = gensub::kernels;

BitMatrix random_dag(std::size_t n) {
  std::mt19937 rng(11);
  std::bernoulli_distribution coin(4.0 / static_cast<double>(n));
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) m.set(i, j);
  return m;
}

void BM_Close(benchmark::State& state) {
  const BitMatrix base = random_dag(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    BitMatrix m = base;
    kernels::close(m);
    benchmark::DoNotOptimize(m);
  }
}

void BM_CloseSerial(benchmark::State& state) {
  const BitMatrix base = random_dag(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    BitMatrix m = base;
    kernels::serial::close(m);
    benchmark::DoNotOptimize(m);
  }
}

void BM_Covers(benchmark::State& state) {
  BitMatrix m = random_dag(static_cast<std::size_t>(state.range(0)));
  kernels::close(m);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::covers(m));
}

void BM_CoversSerial(benchmark::State& state) {
  BitMatrix m = random_dag(static_cast<std::size_t>(state.range(0)));
  kernels::close(m);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::covers(m));
}

const gensub::SubtypingApprox& h1_depth3() {
  static const gensub::SubtypingApprox s = gensub::build(
      gensub::parse_class_table("class String\nclass List<T>\nclass LinkedList<T> extends List<T>\n"), 3,
      gensub::ArgMode::kWildcard);
  return s;
}

void BM_OracleScan(benchmark::State& state) {
  const auto& s = h1_depth3();
  for (auto _ : state) benchmark::DoNotOptimize(gensub::oracle_mismatches(s));
}

void BM_OracleScanSerial(benchmark::State& state) {
  const auto& s = h1_depth3();
  for (auto _ : state) benchmark::DoNotOptimize(gensub::serial_oracle_mismatches(s));
}

void BM_BuildDepth3(benchmark::State& state) {
  const auto table = gensub::parse_class_table("class String\nclass List<T>\nclass LinkedList<T> extends List<T>\n");
  for (auto _ : state) benchmark::DoNotOptimize(gensub::build(table, 3, gensub::ArgMode::kWildcard));
}

}  // namespace

BENCHMARK(BM_Close)->Arg(128)->Arg(512)->Arg(1024);
BENCHMARK(BM_CloseSerial)->Arg(128)->Arg(512)->Arg(1024);
BENCHMARK(BM_Covers)->Arg(128)->Arg(512);
BENCHMARK(BM_CoversSerial)->Arg(128)->Arg(512);
BENCHMARK(BM_OracleScan);
BENCHMARK(BM_OracleScanSerial);
BENCHMARK(BM_BuildDepth3);

BENCHMARK_MAIN();
