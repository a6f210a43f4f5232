#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "gatedfield/commutator.hpp"
#include "gatedfield/gates.hpp"

namespace gatedfield {

// Photon-mode amplitudes in a periodic box (internal units hbar = c = 1):
//   u_k = sqrt(2*pi/k)  (vector potential),  v_k = -i sqrt(2*pi*k)  (field),
// fixed by v^2 + k^2 u^2 = 0 and v u* - v* u = -4*pi*i.
struct ModeAmplitudes {
    double u = 0.0;
    std::complex<double> v{0.0, 0.0};
};

ModeAmplitudes mode_amplitudes(double k);

struct BoxMode {
    std::array<std::int64_t, 3> n{}; // integer lattice vector, k = 2*pi*n/L
    Vec3 k{};
    double k_mag = 0.0;
    Vec3 e1{}, e2{};       // transverse polarization basis, shared with -n
    ModeAmplitudes amps{};
    bool canonical = false;   // lexicographically positive n
    std::size_t partner = 0;  // index of the -n mode
    std::size_t pair_index = 0;
};

// All modes 0 < |n|_inf <= N of a periodic box of size L, in lexicographic
// order over n. Each +/-k pair shares one polarization basis, built from the
// canonical representative: e1 = normalize(k x z^) (x^ fallback near the z
// axis), e2 = k^ x e1.
class BoxLattice {
public:
    BoxLattice(double box_size, int cutoff_n);

    double box_size() const { return box_size_; }
    int cutoff() const { return cutoff_; }
    double volume() const { return box_size_ * box_size_ * box_size_; }
    // per-axis cutoff 2*pi*N/L (the resolution figure quoted in convergence
    // studies)
    double k_max() const;
    std::span<const BoxMode> modes() const { return modes_; }
    std::size_t mode_count() const { return modes_.size(); }
    std::size_t pair_count() const { return modes_.size() / 2; }

private:
    double box_size_;
    int cutoff_;
    std::vector<BoxMode> modes_;
};

inline constexpr double default_support_tol = 1e-8;

// Fraction of the gate's |field| mass outside the box region
// [-L/2, L/2]^3; the image-overlap error scale of the periodic expansion.
double support_mass_outside_box(const VectorGate& g, const BoxLattice& lat);

// Discrete variance sum (1/V) sum_k 2*pi*k (|eta~|^2 - |eta~.k^|^2);
// converges to variance_quadrature as the box and cutoff grow. Throws
// gatedfield::numeric_error when the support mass exceeds support_tol
// (convergence studies pass a relaxed tolerance on purpose).
double discrete_variance(const VectorGate& g, const BoxLattice& lat,
                         double support_tol = default_support_tol);

// h via the mode sum -(4*pi/V) sum_k i k.(eta~*(k) x gamma~(k)); the +/-k
// pairing makes it real, and the residual imaginary fraction is reported in
// the result.
BoundResult discrete_h(const GatePair& p, const BoxLattice& lat,
                       double support_tol = default_support_tol);

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::int64_t n_samples = 0;
    std::uint64_t seed = 0;
};

// Monte Carlo vacuum-variance estimator: per sample, every canonical
// (pair, polarization) stream draws one standard-normal pair from the
// counter-based generator (counter = sample * n_streams + stream, streams in
// lexicographic pair order), synthesizes the gated-field value, and the
// sample variance plus its standard error s^2 sqrt(2/(n-1)) are returned.
// Reproducible bitwise for a fixed seed.
McEstimate mc_variance(const VectorGate& g, const BoxLattice& lat,
                       std::uint64_t seed, std::int64_t n_samples,
                       double support_tol = default_support_tol);

// Cutoff-dependent zero-point sum sum_k sum_pol (1/2) k over the truncated
// lattice. A diagnostic only: it diverges with the cutoff and carries no
// physics without regularization.
double zero_point_energy(const BoxLattice& lat);

} // namespace gatedfield
