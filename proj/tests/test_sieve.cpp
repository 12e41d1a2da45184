#include <omp.h>

#include <cstdint>
#include <vector>

#include "doctest.h"
#include "primeflow/errors.hpp"
#include "primeflow/reference.hpp"
#include "primeflow/sieve.hpp"

using namespace primeflow;

TEST_SUITE("sieve") {

TEST_CASE("is_prime agrees with trial division on small values") {
    for (uint64_t n = 0; n <= 20'000; ++n)
        CHECK(is_prime(n) == reference::is_prime_trial(n));
}

TEST_CASE("is_prime handles adversarial composites and large primes") {
    // Strong pseudoprimes to small bases; the full witness set must reject.
    CHECK_FALSE(is_prime(2047));                 // 23 * 89, spsp base 2
    CHECK_FALSE(is_prime(3215031751ULL));        // spsp bases 2,3,5,7
    CHECK_FALSE(is_prime(3825123056546413051ULL));  // spsp first 9 bases
    CHECK_FALSE(is_prime(561));                  // Carmichael
    CHECK(is_prime(2305843009213693951ULL));     // 2^61 - 1
    CHECK(is_prime(18446744073709551557ULL));    // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ULL));
    CHECK(is_prime(999999999999999989ULL));
}

TEST_CASE("base_primes covers everything up to sqrt(hi)") {
    const BasePrimes base = base_primes(10'000);
    CHECK(base.limit >= 100);
    REQUIRE_FALSE(base.primes.empty());
    CHECK(base.primes.front() == 2);
    uint64_t count_to_100 = 0;
    for (uint32_t p : base.primes) {
        CHECK(reference::is_prime_trial(p));
        if (p <= 100) ++count_to_100;
    }
    CHECK(count_to_100 == 25);
}

TEST_CASE("sieve_range flags match trial division") {
    SUBCASE("from zero") {
        const SieveSegment seg = sieve_range(0, 1'000);
        CHECK(seg.count() == 168);
        for (uint64_t n = 0; n <= 1'000; ++n)
            CHECK(seg.is_prime(n) == reference::is_prime_trial(n));
    }
    SUBCASE("offset window") {
        const uint64_t lo = 1'000'000, hi = 1'010'000;
        const SieveSegment seg = sieve_range(lo, hi);
        const auto flags = reference::prime_flags_trial(lo, hi);
        for (uint64_t n = lo; n <= hi; ++n)
            CHECK(seg.is_prime(n) == static_cast<bool>(flags[n - lo]));
    }
    SUBCASE("window around a chunk boundary") {
        const uint64_t lo = kSieveChunk - 50, hi = kSieveChunk + 50;
        const SieveSegment seg = sieve_range(lo, hi);
        for (uint64_t n = lo; n <= hi; ++n)
            CHECK(seg.is_prime(n) == reference::is_prime_trial(n));
    }
}

TEST_CASE("sieve_range rejects bad windows") {
    CHECK_THROWS_AS(sieve_range(10, 5), ConfigError);
    CHECK_THROWS_AS(sieve_range(0, kDefaultSegmentCap + 1), LimitError);
    CHECK_THROWS_AS(sieve_range(kMaxSieveBound, kMaxSieveBound + 10),
                    LimitError);
}

TEST_CASE("count_primes_in matches the serial sieve") {
    CHECK(count_primes_in(0, 1'000'000) == 78'498);
    CHECK(count_primes_in(100, 200) == 21);
    CHECK(count_primes_in(0, 1) == 0);
    CHECK(count_primes_in(2, 2) == 1);
    // Range wide enough to span several parallel chunks.
    const uint64_t n = 34'000'000;
    CHECK(count_primes_in(0, n) == reference::pi_serial(n));
}

TEST_CASE("count_primes_in is independent of the thread count") {
    const uint64_t expected = count_primes_in(0, 40'000'000);
    const int saved = omp_get_max_threads();
    for (int threads : {1, 3, 7}) {
        omp_set_num_threads(threads);
        CHECK(count_primes_in(0, 40'000'000) == expected);
    }
    omp_set_num_threads(saved);
}

TEST_CASE("for_each_prime streams primes in order") {
    std::vector<uint64_t> got;
    for_each_prime(100, [&](uint64_t p) { got.push_back(p); });
    const std::vector<uint64_t> want{2,  3,  5,  7,  11, 13, 17, 19, 23,
                                     29, 31, 37, 41, 43, 47, 53, 59, 61,
                                     67, 71, 73, 79, 83, 89, 97};
    CHECK(got == want);
    got.clear();
    for_each_prime(1, [&](uint64_t p) { got.push_back(p); });
    CHECK(got.empty());
}

TEST_CASE("primes_up_to materializes the right list") {
    const auto primes = primes_up_to(1'000'000);
    REQUIRE(primes.size() == 78'498);
    CHECK(primes.front() == 2);
    CHECK(primes.back() == 999'983);
    CHECK_THROWS_AS(primes_up_to(kMaterializeLimit + 1), LimitError);
}

}  // TEST_SUITE
