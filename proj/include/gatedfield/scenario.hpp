#pragma once

#include <string>

namespace gatedfield {

enum class ScenarioMode { exact, paper_constants };

const char* scenario_mode_name(ScenarioMode m);

// End-to-end nano-gate comparison in SI units: the maximized uncertainty-product
// lower bound for identical Gaussian gates of size l versus the E.H energy
// density of a beam of the given intensity.
struct ScenarioReport {
    double gate_l_m = 0.0;          // m
    double intensity_si = 0.0;      // J s^-1 m^-2
    double eh_product_si = 0.0;     // 4*pi*I/c, J m^-3
    double bound_product_max_si = 0.0; // max over separation, J m^-3
    double ratio = 0.0;             // bound_product_max / eh_product
    double delta_e_over_e = 0.0;    // sqrt(ratio): plane wave E = H, coherent dE = dH
    ScenarioMode mode = ScenarioMode::exact;
};

// exact mode: Robertson bound (hbar/2)|h| at the maximizing separation
// sqrt(2)*l, CODATA constants. paper_constants mode: the unhalved
// commutator-magnitude bound with hc = 2e-25 J*m and c = 3e8 m/s, i.e. the
// rounded-constant chain reproduced verbatim.
ScenarioReport nanogate_example(double l_m, double intensity_si, ScenarioMode mode);

// Two-column human-readable rendering (quantity, value + unit).
std::string scenario_table(const ScenarioReport& r);

} // namespace gatedfield
