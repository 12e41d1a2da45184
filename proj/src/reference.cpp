#include "primeflow/reference.hpp"

namespace primeflow::reference {

bool is_prime_trial(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<char> prime_flags_trial(uint64_t lo, uint64_t hi) {
    std::vector<char> flags;
    flags.reserve(hi - lo + 1);
    for (uint64_t n = lo; n <= hi; ++n) flags.push_back(is_prime_trial(n));
    return flags;
}

std::vector<bool> sieve_flags_serial(uint64_t n) {
    std::vector<bool> is_prime(n + 1, true);
    is_prime[0] = false;
    if (n >= 1) is_prime[1] = false;
    for (uint64_t p = 2; p * p <= n; ++p)
        if (is_prime[p])
            for (uint64_t m = p * p; m <= n; m += p) is_prime[m] = false;
    return is_prime;
}

uint64_t pi_serial(uint64_t n) {
    if (n < 2) return 0;
    const auto flags = sieve_flags_serial(n);
    uint64_t count = 0;
    for (uint64_t i = 2; i <= n; ++i) count += flags[i];
    return count;
}

double reciprocal_prime_sum_serial(uint64_t lambda) {
    long double sum = 0.0L;
    if (lambda < 3) return 0.0;
    const auto flags = sieve_flags_serial(lambda - 1);
    for (uint64_t p = 2; p < lambda; ++p)
        if (flags[p]) sum += 1.0L / static_cast<long double>(p);
    return static_cast<double>(sum);
}

}  // namespace primeflow::reference
