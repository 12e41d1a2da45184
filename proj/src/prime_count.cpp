#include "primeflow/prime_count.hpp"

#include <vector>

#include "primeflow/errors.hpp"
#include "primeflow/sieve.hpp"

namespace primeflow {

PrimePi pi_sieve(uint64_t n, const CountLimits& limits) {
    if (n > limits.sieve_limit)
        throw LimitError("pi_sieve: n exceeds the sieve limit");
    if (n < 2) return {n, 0};
    return {n, count_primes_in(0, n)};
}

// Divide-and-conquer prime counting (the recurrence usually credited to
// Legendre, in the form that walks the distinct values of n/k):
//
//   S(v, p) = S(v, p-1) - [S(v/p, p-1) - S(p-1, p-1)]   for prime p, p^2 <= v
//
// where S(v, p) counts integers in [2, v] left after sieving by all primes
// <= p. Only the O(sqrt n) distinct values v = n/k ever occur, stored in two
// arrays: small[v] for v <= r and large[k] for v = n/k > r.
PrimePi pi_fast(uint64_t n, const CountLimits& limits) {
    if (n > limits.fast_limit)
        throw LimitError("pi_fast: n exceeds the fast-count limit");
    if (n < 2) return {n, 0};

    const uint64_t r = isqrt64(n);
    std::vector<uint64_t> small(r + 1), large(r + 1);
    for (uint64_t v = 1; v <= r; ++v) small[v] = v - 1;
    for (uint64_t k = 1; k <= r; ++k) large[k] = n / k - 1;

    for (uint64_t p = 2; p <= r; ++p) {
        if (small[p] == small[p - 1]) continue;  // p composite
        const uint64_t sp = small[p - 1];        // pi(p - 1)
        const uint64_t p2 = p * p;
        const uint64_t kmax = std::min(r, n / p2);
        for (uint64_t k = 1; k <= kmax; ++k) {
            const uint64_t kp = k * p;
            if (kp <= r)
                large[k] -= large[kp] - sp;
            else
                large[k] -= small[n / kp] - sp;
        }
        for (uint64_t v = r; v >= p2; --v) small[v] -= small[v / p] - sp;
    }
    return {n, large[1]};
}

PrimePi pi_auto(uint64_t n, const CountLimits& limits) {
    // Small n: sieving is instant. Large n: the sublinear counter, falling
    // back to the sieve when only its cap is high enough.
    constexpr uint64_t kSmall = 100'000'000ULL;
    if (n <= kSmall && n <= limits.sieve_limit) return pi_sieve(n, limits);
    if (n <= limits.fast_limit) return pi_fast(n, limits);
    if (n <= limits.sieve_limit) return pi_sieve(n, limits);
    throw LimitError("pi: n exceeds every configured counting limit");
}

}  // namespace primeflow
