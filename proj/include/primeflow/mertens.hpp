#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace primeflow {

// One evaluation of the reciprocal-prime sum against its log log model.
// fbar = sum / loglog and residual = sum - loglog hold by construction.
struct MertensSample {
    uint64_t lambda = 0;
    double sum = 0.0;       // sum of 1/p over primes p < lambda
    double loglog = 0.0;    // log(log(lambda)), natural logs
    double fbar = 0.0;
    double residual = 0.0;
};

// Sum of 1/p over primes p < lambda (strict cutoff; at prime lambda the
// prime itself is excluded). Compensated summation throughout; partials are
// combined in fixed chunk order, so the value is bitwise deterministic for
// any thread count. Requires lambda >= 3 so that log log lambda > 0.
double reciprocal_prime_sum(uint64_t lambda);

MertensSample fbar(uint64_t lambda);

// One sample per grid point from a single enumeration pass with incremental
// sums. Grid must be strictly increasing with every entry >= 3.
std::vector<MertensSample> mertens_residual_curve(std::span<const uint64_t> grid);

}  // namespace primeflow
