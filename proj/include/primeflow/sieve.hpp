#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "primeflow/errors.hpp"

namespace primeflow {

// Largest hi accepted by the windowed sieve routines. Base primes up to
// sqrt(hi) are materialized as 32-bit values, so the bound is (10^8)^2.
inline constexpr uint64_t kMaxSieveBound = 10'000'000'000'000'000ULL;

// Default cap on a single sieve_range window (number count).
inline constexpr uint64_t kDefaultSegmentCap = uint64_t{1} << 26;

// Chunk size used when a larger range is processed window by window.
// Chunks are fixed so results do not depend on the thread count.
inline constexpr uint64_t kSieveChunk = uint64_t{1} << 24;

uint64_t isqrt64(uint64_t n);

// Primes up to sqrt of the sieving bound, generated once and shared
// read-only by every window.
struct BasePrimes {
    uint32_t limit = 0;  // covers every prime <= limit
    std::vector<uint32_t> primes;
};

BasePrimes base_primes(uint64_t sieve_hi);

// Compositeness flags for the odd numbers of a window. Bit j corresponds to
// first_odd + 2j; a set bit means composite (or the unit 1).
struct OddWindow {
    uint64_t first_odd = 0;
    uint64_t count = 0;
    std::vector<uint64_t> composite;

    bool is_composite(uint64_t j) const {
        return (composite[j >> 6] >> (j & 63)) & 1u;
    }
};

OddWindow sieve_odd_window(uint64_t lo, uint64_t hi, const BasePrimes& base);

// Primality flags for a contiguous window [lo, hi], one bit per integer.
struct SieveSegment {
    uint64_t lo = 0;
    uint64_t hi = 0;
    std::vector<uint64_t> words;  // bit i <-> lo + i

    uint64_t size() const { return hi - lo + 1; }

    bool bit(uint64_t i) const { return (words[i >> 6] >> (i & 63)) & 1u; }

    bool is_prime(uint64_t n) const { return bit(n - lo); }

    uint64_t count() const {
        uint64_t c = 0;
        for (uint64_t w : words) c += std::popcount(w);
        return c;
    }
};

// Sieves one window. Throws LimitError when the window is wider than the
// cap or hi exceeds the supported maximum.
SieveSegment sieve_range(uint64_t lo, uint64_t hi,
                         uint64_t segment_cap = kDefaultSegmentCap);

// Exact prime count in [lo, hi]. Internally walks fixed chunks; the chunk
// loop is OpenMP-parallel with an integer reduction, so the result is
// deterministic for any thread count.
uint64_t count_primes_in(uint64_t lo, uint64_t hi, const BasePrimes& base);
uint64_t count_primes_in(uint64_t lo, uint64_t hi);

// Deterministic primality for the full 64-bit range (strong-pseudoprime
// test with a witness set proven exact beyond 2^64; never probabilistic).
bool is_prime(uint64_t n);

// Streams every prime <= limit in increasing order without materializing
// the list. Serial; one chunk of flags lives in memory at a time.
template <class Fn>
void for_each_prime(uint64_t limit, Fn&& fn) {
    if (limit < 2) return;
    if (limit > kMaxSieveBound)
        throw LimitError("for_each_prime: limit exceeds supported maximum");
    fn(uint64_t{2});
    const BasePrimes base = base_primes(limit);
    for (uint64_t lo = 3; lo <= limit; lo += kSieveChunk) {
        const uint64_t hi = std::min(limit, lo + kSieveChunk - 1);
        const OddWindow w = sieve_odd_window(lo, hi, base);
        for (uint64_t j = 0; j < w.count; ++j) {
            if (!w.is_composite(j)) fn(w.first_odd + 2 * j);
        }
        if (hi == kMaxSieveBound) break;  // avoid lo overflowing past hi
    }
}

// Materialized convenience for moderate n; use for_each_prime above this cap.
inline constexpr uint64_t kMaterializeLimit = 100'000'000ULL;

std::vector<uint64_t> primes_up_to(uint64_t n);

}  // namespace primeflow
