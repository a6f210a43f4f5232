#pragma once

#include <optional>

#include "gatedfield/gates.hpp"

namespace gatedfield {

enum class HMethod { real_space, dual_form, closed_form, discrete_sum };

const char* method_name(HMethod m);

// The scalar h(eta, gamma) multiplying -i*hbar in the gated E-H commutator,
// together with the Robertson lower bound (hbar/2)|h| (hbar = 1 internally).
struct BoundResult {
    double h_value = 0.0;
    double robertson_bound = 0.0; // |h_value| / 2, stored for the invariant
    HMethod method = HMethod::real_space;
    std::optional<double> effective_width;     // closed_form only
    std::optional<double> imaginary_residual;  // discrete_sum diagnostic

    static BoundResult make(double h, HMethod m);
};

struct GatePair {
    VectorGate electric_gate;
    VectorGate magnetic_gate;
};

// h = 4*pi * integral (curl eta).gamma d3r, by trapezoid quadrature on the
// common lattice (finest spacing, union extent). Analytic gates are evaluated
// exactly on that lattice; grid gates must share an aligned lattice.
BoundResult h_real_space(const GatePair& p);

// h = -4*pi * integral (curl gamma).eta d3r; equals h_real_space for decayed
// gates (integration by parts).
BoundResult h_dual_form(const GatePair& p);

// sqrt((l^2 + l'^2)/2): the single width governing a Gaussian gate pair.
double effective_width(double l, double l_prime);

// Closed form for unit-amplitude Gaussian gates:
//   h = -4*pi (u x v) . grad delta(separation; sqrt(l^2 + l'^2))
// separation = (electric gate center) - (magnetic gate center).
BoundResult h_gaussian_closed(double l, double l_prime, const Vec3& separation,
                              const Vec3& u, const Vec3& v);

// Diagnostic: the axis-component commutator magnitude for identical-width
// Gaussian gates along lab axes j != s (0 = x, 1 = y, 2 = z),
//   4*pi / (sqrt(2) l) * (4*pi)^{-3/2} l^{-3} * |d_m| / (sqrt(2) l)
//     * exp(-|d|^2 / (4 l^2)) * |eps_{jsm}|.
// This is |h|, i.e. exactly twice the Robertson bound; reported separately so
// the factor-2 relation stays visible in outputs.
double axis_commutator_magnitude(double l, const Vec3& separation, int axis_j,
                                 int axis_s);

struct SeparationOptimum {
    double distance;    // argmax of the dimensionless overlap factor
    double peak_factor; // its maximum, 1/sqrt(e) for a Gaussian
};

// Maximizes (x / (sqrt(2) l)) exp(-x^2 / (4 l^2)) over [0, 10l] by
// golden-section search.
SeparationOptimum optimal_separation(double l);

} // namespace gatedfield
