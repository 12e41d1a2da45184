#include <benchmark/benchmark.h>

#include "primeflow/mertens.hpp"
#include "primeflow/prime_count.hpp"
#include "primeflow/reference.hpp"
#include "primeflow/sieve.hpp"

namespace {

// Serial textbook sieve vs the segmented/parallel counter vs the
// divide-and-conquer counter, over the same n.

void BM_pi_serial_reference(benchmark::State& state) {
    const auto n = static_cast<uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(primeflow::reference::pi_serial(n));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(n));
}

void BM_pi_segmented(benchmark::State& state) {
    const auto n = static_cast<uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(primeflow::pi_sieve(n).count);
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(n));
}

void BM_pi_fast(benchmark::State& state) {
    const auto n = static_cast<uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(primeflow::pi_fast(n).count);
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(n));
}

void BM_reciprocal_sum_serial(benchmark::State& state) {
    const auto lambda = static_cast<uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            primeflow::reference::reciprocal_prime_sum_serial(lambda));
}

void BM_reciprocal_sum_parallel(benchmark::State& state) {
    const auto lambda = static_cast<uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(primeflow::reciprocal_prime_sum(lambda));
}

BENCHMARK(BM_pi_serial_reference)->Arg(1'000'000)->Arg(10'000'000);
BENCHMARK(BM_pi_segmented)->Arg(1'000'000)->Arg(10'000'000)->Arg(100'000'000);
BENCHMARK(BM_pi_fast)->Arg(10'000'000)->Arg(100'000'000)->Arg(1'000'000'000);
BENCHMARK(BM_reciprocal_sum_serial)->Arg(1'000'000)->Arg(10'000'000);
BENCHMARK(BM_reciprocal_sum_parallel)->Arg(1'000'000)->Arg(10'000'000);

}  // namespace

BENCHMARK_MAIN();
