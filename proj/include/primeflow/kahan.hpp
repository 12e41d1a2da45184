#pragma once

#include <cmath>

namespace primeflow {

// Neumaier-compensated accumulator. Keeps the running error of every add in
// a separate compensation term, so the result is accurate to a couple of
// ulps regardless of how many terms go in.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    // Folds another accumulator in. Order of merges matters for bitwise
    // reproducibility; callers combine partials in a fixed order.
    void merge(const KahanSum& other) {
        add(other.sum);
        add(other.comp);
    }

    double value() const { return sum + comp; }
};

}  // namespace primeflow
