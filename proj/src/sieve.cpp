#include "primeflow/sieve.hpp"

#include <cmath>
#include <cstdint>

namespace primeflow {

uint64_t isqrt64(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

BasePrimes base_primes(uint64_t sieve_hi) {
    if (sieve_hi > kMaxSieveBound)
        throw LimitError("sieve: hi exceeds the supported maximum (1e16)");
    const uint64_t limit = isqrt64(sieve_hi);
    BasePrimes out;
    out.limit = static_cast<uint32_t>(limit);
    if (limit < 2) return out;
    out.primes.push_back(2);
    if (limit < 3) return out;

    // Odd-only flag array over [3, limit]; bit j <-> 3 + 2j composite.
    const uint64_t n_odds = (limit - 3) / 2 + 1;
    std::vector<uint64_t> comp((n_odds + 63) / 64, 0);
    auto set = [&](uint64_t j) { comp[j >> 6] |= uint64_t{1} << (j & 63); };
    auto get = [&](uint64_t j) { return (comp[j >> 6] >> (j & 63)) & 1u; };

    for (uint64_t p = 3; p * p <= limit; p += 2) {
        if (get((p - 3) / 2)) continue;
        for (uint64_t m = p * p; m <= limit; m += 2 * p) set((m - 3) / 2);
    }
    for (uint64_t j = 0; j < n_odds; ++j)
        if (!get(j)) out.primes.push_back(static_cast<uint32_t>(3 + 2 * j));
    return out;
}

OddWindow sieve_odd_window(uint64_t lo, uint64_t hi, const BasePrimes& base) {
    OddWindow w;
    uint64_t first = std::max<uint64_t>(lo, 1);
    if ((first & 1) == 0) ++first;
    if (first > hi) return w;
    w.first_odd = first;
    w.count = (hi - first) / 2 + 1;
    w.composite.assign((w.count + 63) / 64, 0);
    auto mark = [&](uint64_t j) {
        w.composite[j >> 6] |= uint64_t{1} << (j & 63);
    };
    if (first == 1) mark(0);  // the unit

    for (uint32_t p32 : base.primes) {
        if (p32 == 2) continue;
        const uint64_t p = p32;
        if (p * p > hi) break;
        uint64_t start = ((lo + p - 1) / p) * p;
        if (start < p * p) start = p * p;
        if ((start & 1) == 0) start += p;
        for (uint64_t m = start; m <= hi; m += 2 * p) mark((m - first) / 2);
    }
    return w;
}

SieveSegment sieve_range(uint64_t lo, uint64_t hi, uint64_t segment_cap) {
    if (lo > hi) throw ConfigError("sieve_range: lo > hi");
    if (hi > kMaxSieveBound)
        throw LimitError("sieve_range: hi exceeds the supported maximum (1e16)");
    if (hi - lo > segment_cap)
        throw LimitError("sieve_range: window exceeds the segment cap");

    SieveSegment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.words.assign((seg.size() + 63) / 64, 0);
    auto set = [&](uint64_t n) {
        const uint64_t i = n - lo;
        seg.words[i >> 6] |= uint64_t{1} << (i & 63);
    };

    if (lo <= 2 && 2 <= hi) set(2);
    const uint64_t odd_lo = std::max<uint64_t>(lo, 3);
    if (odd_lo <= hi) {
        const BasePrimes base = base_primes(hi);
        const OddWindow w = sieve_odd_window(odd_lo, hi, base);
        for (uint64_t j = 0; j < w.count; ++j)
            if (!w.is_composite(j)) set(w.first_odd + 2 * j);
    }
    return seg;
}

uint64_t count_primes_in(uint64_t lo, uint64_t hi, const BasePrimes& base) {
    if (lo > hi) throw ConfigError("count_primes_in: lo > hi");
    uint64_t total = (lo <= 2 && 2 <= hi) ? 1 : 0;
    const uint64_t start = std::max<uint64_t>(lo, 3);
    if (start > hi) return total;

    const int64_t n_chunks =
        static_cast<int64_t>((hi - start) / kSieveChunk) + 1;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (int64_t c = 0; c < n_chunks; ++c) {
        const uint64_t clo = start + static_cast<uint64_t>(c) * kSieveChunk;
        const uint64_t chi = std::min(hi, clo + kSieveChunk - 1);
        const OddWindow w = sieve_odd_window(clo, chi, base);
        uint64_t composites = 0;
        for (uint64_t word : w.composite) composites += std::popcount(word);
        total += w.count - composites;
    }
    return total;
}

uint64_t count_primes_in(uint64_t lo, uint64_t hi) {
    const BasePrimes base = base_primes(hi);
    return count_primes_in(lo, hi, base);
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Strong-pseudoprime check for one witness.
bool sprp(uint64_t n, uint64_t a, uint64_t d, int s) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    // The witness set {2,3,...,37} is deterministic for all n < 3.3e24,
    // which covers the whole 64-bit range.
    constexpr uint64_t witnesses[] = {2,  3,  5,  7,  11, 13,
                                      17, 19, 23, 29, 31, 37};
    for (uint64_t p : witnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : witnesses)
        if (!sprp(n, a, d, s)) return false;
    return true;
}

std::vector<uint64_t> primes_up_to(uint64_t n) {
    if (n > kMaterializeLimit)
        throw LimitError(
            "primes_up_to: n exceeds the materialization cap; "
            "use for_each_prime");
    std::vector<uint64_t> out;
    if (n >= 2) out.reserve(static_cast<size_t>(1.2 * n / std::log(n) + 16));
    for_each_prime(n, [&](uint64_t p) { out.push_back(p); });
    return out;
}

}  // namespace primeflow
