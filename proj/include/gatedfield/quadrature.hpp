#pragma once

#include <functional>
#include <vector>

namespace gatedfield {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes via Newton iteration on the Legendre recurrence; cached per order.
const GaussLegendreRule& gauss_legendre(int order);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
};

// Adaptive Gauss-Legendre integration of f on [a, b]. Each panel's 15-point
// estimate is compared against the sum over its two halves; panels failing the
// relative tolerance are bisected. Panels are processed left to right and the
// accepted contributions accumulated with compensated summation, so the result
// is deterministic.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol = 1e-10,
                                    int max_depth = 48);

} // namespace gatedfield
