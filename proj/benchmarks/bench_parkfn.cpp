#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "parkfn/counting.hpp"
#include "parkfn/cycles.hpp"
#include "parkfn/pollak.hpp"
#include "parkfn/prefseq.hpp"
#include "parkfn/rng.hpp"

namespace {

using namespace parkfn;

std::vector<int> random_values(int n, int bound, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int& value : values) value = rng.uniform_int(1, bound);
  return values;
}

// A known parking function of length n: preferences 1,1,2,3,...,n-1.
PrefSeq dense_parking_function(int n) {
  std::vector<int> values(static_cast<std::size_t>(n), 1);
  for (int i = 2; i < n; ++i) values[static_cast<std::size_t>(i)] = i;
  return PrefSeq(std::move(values));
}

void BM_IsParkingFunction(benchmark::State& state) {
  const PrefSeq seq = dense_parking_function(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_parking_function(seq));
  }
}
BENCHMARK(BM_IsParkingFunction)->Arg(8)->Arg(64)->Arg(512)->Arg(4096);

void BM_IsPrimeParkingFunction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> values(static_cast<std::size_t>(n), 1);
  for (int i = 2; i < n; ++i) values[static_cast<std::size_t>(i)] = i - 1;
  const PrefSeq seq{std::move(values)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_prime_parking_function(seq));
  }
}
BENCHMARK(BM_IsPrimeParkingFunction)->Arg(8)->Arg(64)->Arg(512)->Arg(4096);

void BM_LineParking(benchmark::State& state) {
  const PrefSeq seq = dense_parking_function(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_line_parking(seq));
  }
}
BENCHMARK(BM_LineParking)->Arg(8)->Arg(64)->Arg(512)->Arg(4096);

void BM_CircularParking(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ModTuple tuple(random_values(n, n + 1, 7), n + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(circular_park(tuple));
  }
}
BENCHMARK(BM_CircularParking)->Arg(8)->Arg(64)->Arg(512)->Arg(4096);

void BM_CycleCensus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PrefSeq seq{random_values(n, n, 11)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cycle_census(seq));
  }
}
BENCHMARK(BM_CycleCensus)->Arg(8)->Arg(64)->Arg(512)->Arg(4096);

// O(n) canonicalization from the circular parking process ...
void BM_CanonicalizeClassical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ModTuple tuple(random_values(n, n + 1, 13), n + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize_classical(tuple));
  }
}
BENCHMARK(BM_CanonicalizeClassical)->Arg(8)->Arg(64)->Arg(512)->Arg(4096);

// ... against the O(n^2 log n) rotation scan it replaces.
void BM_CanonicalizeByScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ModTuple tuple(random_values(n, n + 1, 13), n + 1);
  for (auto _ : state) {
    const std::vector<int> shifts =
        valid_rotations(tuple, [](const PrefSeq& seq) { return is_parking_function(seq); });
    benchmark::DoNotOptimize(rotate(tuple, shifts.front()));
  }
}
BENCHMARK(BM_CanonicalizeByScan)->Arg(8)->Arg(64)->Arg(512);

void BM_SampleClassical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_classical(n, rng));
  }
}
BENCHMARK(BM_SampleClassical)->Arg(8)->Arg(64)->Arg(512)->Arg(4096);

void BM_SamplePrime(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_prime(n, rng));
  }
}
BENCHMARK(BM_SamplePrime)->Arg(8)->Arg(64)->Arg(512);

void BM_EnumerateClassical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  EnumOptions options;
  options.threads = static_cast<int>(state.range(1));
  std::uint64_t emitted = 0;
  for (auto _ : state) {
    emitted = 0;
    enumerate_classical(n, [&](const PrefSeq& seq) {
      benchmark::DoNotOptimize(seq);
      ++emitted;
    }, options);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(emitted) * state.iterations());
}
BENCHMARK(BM_EnumerateClassical)
    ->Args({6, 1})
    ->Args({7, 1})
    ->Args({7, 4})
    ->Args({8, 4})
    ->Unit(benchmark::kMillisecond);

void BM_CountCyclesClassical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_cycles_classical(n, 3, 2));
  }
}
BENCHMARK(BM_CountCyclesClassical)->Arg(50)->Arg(200)->Arg(1000);

void BM_ExpectedCyclesClassical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_cycles_classical(n, 5));
  }
}
BENCHMARK(BM_ExpectedCyclesClassical)->Arg(50)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
