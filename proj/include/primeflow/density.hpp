#pragma once

#include <cstdint>

#include "primeflow/prime_count.hpp"

namespace primeflow {

// Cumulative prime density at one scale: d = pi(n)/n.
struct DensitySample {
    uint64_t n = 0;
    uint64_t pi = 0;
    double density = 0.0;
    double inv_density = 0.0;  // n / pi
    double log_n = 0.0;
};

// Local density over a symmetric window, as opposed to the cumulative ratio.
struct WindowDensity {
    uint64_t lo = 0;
    uint64_t hi = 0;
    uint64_t count = 0;
    double density = 0.0;  // count / (hi - lo + 1)
};

// Empirical density next to the two analytic models.
struct ModelComparison {
    DensitySample sample;
    double inv_log = 0.0;    // 1 / log n
    double li_over_n = 0.0;  // li(n) / n
    double rel_err_invlog = 0.0;
    double rel_err_li = 0.0;
};

DensitySample density_at(uint64_t n, const CountLimits& limits = {});

// Offset logarithmic integral: integral of dt/log t from 2 to x.
// li(2) == 0; throws DomainError for x < 2.
double li(double x);

// Primes in [center - width/2, center + width/2] over the window length.
// Requires center > width/2 >= 1.
WindowDensity window_density(uint64_t center, uint64_t width,
                             const CountLimits& limits = {});

// Window wide enough to tame fluctuations, narrow relative to the scale.
uint64_t default_window_width(uint64_t center);

ModelComparison compare_models(uint64_t n, const CountLimits& limits = {});

}  // namespace primeflow
