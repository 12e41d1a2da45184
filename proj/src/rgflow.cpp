#include "primeflow/rgflow.hpp"

#include <cmath>
#include <string>

#include "primeflow/errors.hpp"

namespace primeflow {

namespace {

constexpr double kBlowUpMagnitude = 1e15;

void require_scale(uint64_t n, const char* what) {
    if (n < 2) throw DomainError(std::string(what) + ": requires n >= 2");
}

}  // namespace

double flow_closed_form(double t, double d0) {
    const double denom = 1.0 + t * d0;
    if (denom <= 0.0) {
        const double t_star = d0 != 0.0 ? -1.0 / d0 : 0.0;
        throw FlowSingularityError(
            "flow_closed_form: t at or past the pole t* = -1/d0", t_star);
    }
    return d0 / denom;
}

double flow_series(double t, double d0, unsigned order) {
    const double q = -t * d0;
    if (!(std::fabs(q) < 1.0))
        throw SeriesRadiusError("flow_series: |t*d0| must be < 1");
    // d0 * sum_{k=0..order} q^k, accumulated lowest order first.
    double sum = 0.0;
    double term = d0;
    for (unsigned k = 0; k <= order; ++k) {
        sum += term;
        term *= q;
    }
    return sum;
}

uint64_t default_flow_steps(double t) {
    const double scaled = std::ceil(1000.0 * std::fabs(t));
    return std::max<uint64_t>(1000, static_cast<uint64_t>(scaled));
}

double flow_numeric(double t, double d0, const QuadraticVectorField& field,
                    uint64_t steps) {
    if (steps == 0) steps = default_flow_steps(t);
    const double h = t / static_cast<double>(steps);
    double d = d0;
    for (uint64_t i = 0; i < steps; ++i) {
        // A fixed step cannot follow a trajectory whose local update is
        // comparable to the state itself; past that point the pole (if any)
        // has won.
        if (!std::isfinite(d) || std::fabs(d) > kBlowUpMagnitude ||
            std::fabs(h) * std::fabs(field(d)) > 0.5 * std::fabs(d) + 1.0)
            throw FlowBlowUpError("flow_numeric: trajectory blew up");
        const double k1 = field(d);
        const double k2 = field(d + 0.5 * h * k1);
        const double k3 = field(d + 0.5 * h * k2);
        const double k4 = field(d + h * k3);
        d += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    if (!std::isfinite(d) || std::fabs(d) > kBlowUpMagnitude)
        throw FlowBlowUpError("flow_numeric: trajectory blew up");
    return d;
}

double group_law_residual(double s, double t, double x) {
    const double one_shot = flow_closed_form(s + t, x);
    const double two_step = flow_closed_form(t, flow_closed_form(s, x));
    return std::fabs(one_shot - two_step);
}

ScaleCheckRecord scale_relation_check(const DensitySample& s1,
                                      const DensitySample& s2) {
    ScaleCheckRecord r;
    r.n1 = s1.n;
    r.n2 = s2.n;
    r.lhs = s1.inv_density - s2.inv_density;
    r.rhs = s1.log_n - s2.log_n;  // log(n1/n2), kept antisymmetric exactly
    r.abs_err = std::fabs(r.lhs - r.rhs);
    r.rel_err = r.abs_err == 0.0 ? 0.0 : r.abs_err / std::fabs(r.rhs);
    return r;
}

Prediction predict_density(uint64_t n_target, uint64_t n_anchor,
                           double anchor_inv_density) {
    require_scale(n_target, "predict_density");
    require_scale(n_anchor, "predict_density");
    Prediction p;
    p.denominator = anchor_inv_density +
                    (std::log(static_cast<double>(n_target)) -
                     std::log(static_cast<double>(n_anchor)));
    p.density = 1.0 / p.denominator;
    p.near_pole =
        p.denominator < kNearPoleDenominator || p.density > 1.0;
    return p;
}

Prediction predict_density(uint64_t n_target, const DensitySample& anchor) {
    return predict_density(n_target, anchor.n, anchor.inv_density);
}

double scale_invariance_check(const WindowSpec& a, const WindowSpec& b) {
    // Every natural in a window counts, so each side is count/count = 1 and
    // the contrast vanishes identically at all scales. Primes break this;
    // window_density on the same specs exhibits the drift.
    auto natural_density = [](const WindowSpec& w) {
        const uint64_t half = w.width / 2;
        if (half < 1 || w.center <= half)
            throw DomainError("scale_invariance_check: invalid window");
        const uint64_t length = 2 * half + 1;
        return static_cast<double>(length) / static_cast<double>(length);
    };
    return std::fabs(natural_density(a) - natural_density(b));
}

}  // namespace primeflow
