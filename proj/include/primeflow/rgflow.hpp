#pragma once

#include <cstdint>

#include "primeflow/density.hpp"

namespace primeflow {

// A point on the density flow: t is the logarithmic scale variable
// (t = log N), d the density there.
struct FlowState {
    double t = 0.0;
    double d = 0.0;
};

// Flow generator V(d) = c * d^2. The density flow has c = -1; the
// coefficient stays a field so tests can perturb it.
struct QuadraticVectorField {
    double c = -1.0;
    double operator()(double d) const { return c * d * d; }
};

// One check of the inverse-density relation between two scales.
struct ScaleCheckRecord {
    uint64_t n1 = 0;
    uint64_t n2 = 0;
    double lhs = 0.0;  // 1/d(n1) - 1/d(n2), empirical
    double rhs = 0.0;  // log(n1) - log(n2)
    double abs_err = 0.0;
    double rel_err = 0.0;
};

// Density extrapolated along the flow, with its pole diagnostics. The
// result is flagged instead of silently returned when the denominator is
// nearly zero or the extrapolated density is unphysical (> 1).
struct Prediction {
    double density = 0.0;
    double denominator = 0.0;
    bool near_pole = false;
};

inline constexpr double kNearPoleDenominator = 1e-6;

// d0 / (1 + t*d0). Throws FlowSingularityError (reporting t* = -1/d0) when
// 1 + t*d0 <= 0.
double flow_closed_form(double t, double d0);

// Partial sum of d0 * (-t*d0)^k for k = 0..order. Valid only inside the
// geometric radius |t*d0| < 1; throws SeriesRadiusError outside.
double flow_series(double t, double d0, unsigned order);

// Classic 4th-order fixed-step integration of d' = field(d) from 0 to t.
// Fixed step keeps results bit-reproducible across runs. Throws
// FlowBlowUpError when the trajectory blows up or the step cannot resolve it.
double flow_numeric(double t, double d0, const QuadraticVectorField& field,
                    uint64_t steps);

// max(1000, ceil(1000 * |t|)) -- enough for ~1e-10 agreement with the
// closed form away from the pole.
uint64_t default_flow_steps(double t);

// |flow(s + t, x) - flow(t, flow(s, x))| via the closed form; an algebraic
// identity, so only rounding remains.
double group_law_residual(double s, double t, double x);

// Reports both sides of 1/d(N1) - 1/d(N2) = log(N1/N2); no tolerance is
// enforced here.
ScaleCheckRecord scale_relation_check(const DensitySample& s1,
                                      const DensitySample& s2);

// 1 / (anchor_inv_density + log(n_target / n_anchor)): the flow moved from
// one measured scale to another.
Prediction predict_density(uint64_t n_target, uint64_t n_anchor,
                           double anchor_inv_density);
Prediction predict_density(uint64_t n_target, const DensitySample& anchor);

// A window of naturals for the scale-invariance contrast.
struct WindowSpec {
    uint64_t center = 0;
    uint64_t width = 0;
};

// |density_a - density_b| where density counts ALL naturals per unit
// length. Always 0: the natural-integer density is scale invariant. The
// drift of the same comparison on prime windows (via window_density) is the
// broken-symmetry signal.
double scale_invariance_check(const WindowSpec& a, const WindowSpec& b);

}  // namespace primeflow
