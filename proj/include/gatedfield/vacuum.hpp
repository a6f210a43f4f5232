#pragma once

#include <string>
#include <variant>

#include "gatedfield/commutator.hpp"
#include "gatedfield/gates.hpp"

namespace gatedfield {

struct VarianceOptions {
    double rel_tol = 1e-10;      // radial quadrature tolerance
    double k_max_factor = 12.0;  // radial cutoff k_max = k_max_factor / l
    double tail_tol = 1e-8;      // max spectral mass allowed beyond the cutoff
};

// Vacuum variance of the gated field,
//   (Delta E)^2 = integral d3k/(2pi)^3 * 2*pi*k * (|eta~|^2 - |eta~.k^|^2),
// in internal units (hbar = c = 1). Analytic Gaussian gates reduce the angular
// integral in closed form (8*pi/3) and integrate radially by adaptive
// Gauss-Legendre; grid/spectral gates use a Riemann sum over the dual lattice
// with the k = 0 node skipped. Throws gatedfield::numeric_error when the
// spectral tail beyond the cutoff carries more than tail_tol of the mass.
double variance_quadrature(const VectorGate& g, const VarianceOptions& opts = {});

// 1 / (3*pi*l^4), the closed form for a unit-amplitude Gaussian gate.
double variance_gaussian_closed(double l);

// Classical driving fields for coherent-state statistics.
struct UniformField {
    Vec3 value{};
};
struct PlaneWaveField {
    Vec3 polarization{0.0, 0.0, 1.0};
    double strength = 1.0;
    Vec3 wavevector{};
    double phase = 0.0; // E(r) = strength * polarization * cos(k.r + phase)
};
using ClassicalField = std::variant<UniformField, PlaneWaveField, GridVectorField>;

struct CoherentStats {
    double mean; // classical gated value
    double std;  // sqrt of the vacuum variance; displacement-independent
};

CoherentStats coherent_state_stats(const VectorGate& g, const ClassicalField& field);

struct UncertaintyReport {
    double delta_e = 0.0;
    double delta_h = 0.0;
    double robertson_bound = 0.0;
    double product = 0.0;
    double margin = 0.0;             // +inf when bound = 0 and product > 0
    bool margin_unconstrained = false; // bound = 0: no constraint to satisfy
    std::string delta_e_method;
    std::string delta_h_method;
    std::string bound_method;
};

// delta_e = sqrt(var(eta)), delta_h = sqrt(var(gamma)),
// bound = (1/2)|h(eta, gamma)|. Closed forms are used when both gates are
// analytic Gaussians; otherwise quadrature / real-space integration, with the
// chosen route recorded in the method tags.
UncertaintyReport uncertainty_report(const GatePair& p);

} // namespace gatedfield
