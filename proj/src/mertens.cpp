#include "primeflow/mertens.hpp"

#include <algorithm>
#include <cmath>

#include "primeflow/errors.hpp"
#include "primeflow/kahan.hpp"
#include "primeflow/sieve.hpp"

namespace primeflow {

namespace {

void require_min_lambda(uint64_t lambda) {
    // log log lambda must be positive; smaller cutoffs are rejected rather
    // than special-cased.
    if (lambda < 3)
        throw ConfigError("mertens: lambda must be >= 3");
}

MertensSample make_sample(uint64_t lambda, double sum) {
    MertensSample s;
    s.lambda = lambda;
    s.sum = sum;
    s.loglog = std::log(std::log(static_cast<double>(lambda)));
    s.fbar = s.sum / s.loglog;
    s.residual = s.sum - s.loglog;
    return s;
}

}  // namespace

double reciprocal_prime_sum(uint64_t lambda) {
    require_min_lambda(lambda);
    const uint64_t limit = lambda - 1;  // strict cutoff p < lambda
    if (limit > kMaxSieveBound)
        throw LimitError("reciprocal_prime_sum: lambda exceeds enumeration cap");

    const BasePrimes base = base_primes(limit);

    // Fixed chunks with per-chunk compensated partials, merged in chunk
    // order afterwards: the result is identical for any thread count.
    const int64_t n_chunks =
        limit < 3 ? 0 : static_cast<int64_t>((limit - 3) / kSieveChunk) + 1;
    std::vector<KahanSum> partial(static_cast<size_t>(n_chunks));

#pragma omp parallel for schedule(dynamic)
    for (int64_t c = 0; c < n_chunks; ++c) {
        const uint64_t clo = 3 + static_cast<uint64_t>(c) * kSieveChunk;
        const uint64_t chi = std::min(limit, clo + kSieveChunk - 1);
        const OddWindow w = sieve_odd_window(clo, chi, base);
        KahanSum acc;
        for (uint64_t j = 0; j < w.count; ++j)
            if (!w.is_composite(j))
                acc.add(1.0 / static_cast<double>(w.first_odd + 2 * j));
        partial[static_cast<size_t>(c)] = acc;
    }

    KahanSum total;
    total.add(0.5);  // p = 2 (limit >= 2 always holds here)
    for (const KahanSum& part : partial) total.merge(part);
    return total.value();
}

MertensSample fbar(uint64_t lambda) {
    return make_sample(lambda, reciprocal_prime_sum(lambda));
}

std::vector<MertensSample> mertens_residual_curve(
    std::span<const uint64_t> grid) {
    if (grid.empty()) throw ConfigError("mertens curve: empty grid");
    for (size_t i = 0; i < grid.size(); ++i) {
        require_min_lambda(grid[i]);
        if (i > 0 && grid[i] <= grid[i - 1])
            throw ConfigError("mertens curve: grid must be strictly increasing");
    }

    const uint64_t limit = grid.back() - 1;
    std::vector<MertensSample> out;
    out.reserve(grid.size());
    size_t next = 0;
    KahanSum acc;
    for_each_prime(limit, [&](uint64_t p) {
        while (next < grid.size() && p >= grid[next]) {
            out.push_back(make_sample(grid[next], acc.value()));
            ++next;
        }
        acc.add(1.0 / static_cast<double>(p));
    });
    while (next < grid.size()) {
        out.push_back(make_sample(grid[next], acc.value()));
        ++next;
    }
    return out;
}

}  // namespace primeflow
