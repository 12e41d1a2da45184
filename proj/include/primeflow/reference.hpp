#pragma once

#include <cstdint>
#include <vector>

namespace primeflow::reference {

// Serial reference implementations, deliberately kept naive. They exist as
// independent oracles for the tests and as the baseline in the benchmark;
// no production path calls them.

// Trial division against every candidate divisor up to sqrt(n).
bool is_prime_trial(uint64_t n);

// Primality flags for [lo, hi] by trial division of each value.
std::vector<char> prime_flags_trial(uint64_t lo, uint64_t hi);

// Textbook serial sieve of Eratosthenes over a full bit array.
std::vector<bool> sieve_flags_serial(uint64_t n);

uint64_t pi_serial(uint64_t n);

// Naive left-to-right long double sum of 1/p over primes p < lambda.
double reciprocal_prime_sum_serial(uint64_t lambda);

}  // namespace primeflow::reference
