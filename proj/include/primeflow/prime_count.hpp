#pragma once

#include <cstdint>

namespace primeflow {

struct PrimePi {
    uint64_t n = 0;
    uint64_t count = 0;
};

// Caps keep a single CLI invocation at minutes, not hours; both can be
// raised by flag.
struct CountLimits {
    uint64_t sieve_limit = 2'000'000'000ULL;
    uint64_t fast_limit = 100'000'000'000ULL;
};

// Exact pi(n) by segmented sieve (parallel over chunks, deterministic sum).
PrimePi pi_sieve(uint64_t n, const CountLimits& limits = {});

// Exact pi(n) by the divide-and-conquer recurrence over the distinct values
// of n/k. O(n^(3/4)) time, O(sqrt n) space, single-threaded and pure.
PrimePi pi_fast(uint64_t n, const CountLimits& limits = {});

// Picks whichever counter fits n under the given caps.
PrimePi pi_auto(uint64_t n, const CountLimits& limits = {});

}  // namespace primeflow
