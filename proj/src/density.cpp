#include "primeflow/density.hpp"

#include <algorithm>
#include <cmath>

#include "primeflow/errors.hpp"
#include "primeflow/kahan.hpp"
#include "primeflow/sieve.hpp"

namespace primeflow {

namespace {

constexpr double kEulerGamma = 0.57721566490153286;

// Ei(z) for z > 0 via the everywhere-positive series
//   Ei(z) = gamma + log z + sum_{k>=1} z^k / (k * k!).
// No cancellation, so the compensated sum is accurate to a few ulps even
// near z ~ 30 where the largest term is ~ e^z / z^(3/2).
double exp_integral(double z) {
    KahanSum tail;
    double term = 1.0;  // z^k / k!
    for (int k = 1; k < 400; ++k) {
        term *= z / k;
        const double contrib = term / k;
        tail.add(contrib);
        if (contrib < 1e-17 * tail.value()) break;
    }
    return kEulerGamma + std::log(z) + tail.value();
}

uint64_t isqrt_floor(uint64_t n) {
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

double li(double x) {
    if (!(x >= 2.0)) throw DomainError("li: requires x >= 2");
    static const double ei_log2 = exp_integral(std::log(2.0));
    if (x == 2.0) return 0.0;
    return exp_integral(std::log(x)) - ei_log2;
}

DensitySample density_at(uint64_t n, const CountLimits& limits) {
    if (n < 2) throw DomainError("density_at: requires n >= 2");
    DensitySample s;
    s.n = n;
    s.pi = pi_auto(n, limits).count;
    s.density = static_cast<double>(s.pi) / static_cast<double>(n);
    s.inv_density = static_cast<double>(n) / static_cast<double>(s.pi);
    s.log_n = std::log(static_cast<double>(n));
    return s;
}

WindowDensity window_density(uint64_t center, uint64_t width,
                             const CountLimits& limits) {
    const uint64_t half = width / 2;
    if (half < 1) throw DomainError("window_density: width must be >= 2");
    if (center <= half)
        throw DomainError("window_density: window reaches below 1");
    WindowDensity w;
    w.lo = center - half;
    w.hi = center + half;
    if (w.hi > limits.sieve_limit)
        throw LimitError("window_density: window exceeds the sieve limit");
    w.count = count_primes_in(w.lo, w.hi);
    w.density =
        static_cast<double>(w.count) / static_cast<double>(w.hi - w.lo + 1);
    return w;
}

uint64_t default_window_width(uint64_t center) {
    return std::max<uint64_t>(10'000, isqrt_floor(center));
}

ModelComparison compare_models(uint64_t n, const CountLimits& limits) {
    ModelComparison cmp;
    cmp.sample = density_at(n, limits);
    cmp.inv_log = 1.0 / cmp.sample.log_n;
    cmp.li_over_n = li(static_cast<double>(n)) / static_cast<double>(n);
    cmp.rel_err_invlog =
        std::fabs(cmp.inv_log - cmp.sample.density) / cmp.sample.density;
    cmp.rel_err_li =
        std::fabs(cmp.li_over_n - cmp.sample.density) / cmp.sample.density;
    return cmp;
}

}  // namespace primeflow
