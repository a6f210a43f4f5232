#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "gatedfield/errors.hpp"
#include "gatedfield/vec3.hpp"

namespace gatedfield {

// Normalized Gaussian kernel of width w:
//   delta(r; w) = (2*pi)^{-3/2} w^{-3} exp(-|r|^2 / (2 w^2)),   integral = 1.
double gaussian_kernel(const Vec3& r, double width);

// grad delta(r; w) = -(r / w^2) delta(r; w)
Vec3 gaussian_kernel_gradient(const Vec3& r, double width);

// ---------------------------------------------------------------------------
// Gate representations
// ---------------------------------------------------------------------------

// eta(r) = amplitude * direction * delta(r - center; width_l)
struct AnalyticGaussianGate {
    Vec3 center{};
    double width_l = 1.0;
    Vec3 direction{0.0, 0.0, 1.0};
    double amplitude = 1.0;

    AnalyticGaussianGate(const Vec3& center_, double width, const Vec3& dir,
                         double amp = 1.0);
};

// Regular Cartesian sample grid, x-fastest node order.
struct GridVectorField {
    Vec3 origin{};
    double spacing = 0.0;
    std::array<std::int64_t, 3> dims{0, 0, 0};
    std::vector<Vec3> samples;

    std::size_t node_count() const {
        return static_cast<std::size_t>(dims[0]) * static_cast<std::size_t>(dims[1]) *
               static_cast<std::size_t>(dims[2]);
    }
    std::size_t index(std::int64_t ix, std::int64_t iy, std::int64_t iz) const {
        return static_cast<std::size_t>(ix + dims[0] * (iy + dims[1] * iz));
    }
    Vec3 node_position(std::int64_t ix, std::int64_t iy, std::int64_t iz) const {
        return {origin.x + spacing * static_cast<double>(ix),
                origin.y + spacing * static_cast<double>(iy),
                origin.z + spacing * static_cast<double>(iz)};
    }

    double max_norm() const;
    // Largest |field| over the outermost node layer.
    double boundary_max_norm() const;
    // boundary_max_norm / max_norm (0 when the field vanishes identically).
    double boundary_decay_ratio() const;
};

// Coefficients on the uniform dual lattice of a sample grid,
// forward convention  eta~(k) = integral eta(r) e^{-ik.r} d3r.
// Slot (ix,iy,iz) holds the coefficient at k = dk .* wrapped integer frequency.
struct SpectralVectorField {
    std::array<std::int64_t, 3> dims{0, 0, 0};
    Vec3 dk{};
    std::vector<CVec3> coefficients;

    std::size_t node_count() const {
        return static_cast<std::size_t>(dims[0]) * static_cast<std::size_t>(dims[1]) *
               static_cast<std::size_t>(dims[2]);
    }
    std::size_t index(std::int64_t ix, std::int64_t iy, std::int64_t iz) const {
        return static_cast<std::size_t>(ix + dims[0] * (iy + dims[1] * iz));
    }
    Vec3 wavevector(std::int64_t ix, std::int64_t iy, std::int64_t iz) const;
    Vec3 wavevector(std::size_t flat) const;
    std::vector<Vec3> wavevectors() const;

    // d3k volume of one dual-lattice cell.
    double cell_volume() const { return dk.x * dk.y * dk.z; }

    // max |c(-k) - conj(c(k))| relative to max |c|; ~1e-16 for transforms of
    // real fields.
    double hermitian_asymmetry() const;
};

using VectorGate = std::variant<AnalyticGaussianGate, GridVectorField, SpectralVectorField>;

// ---------------------------------------------------------------------------
// Gate calculus
// ---------------------------------------------------------------------------

Vec3 eval_gate(const AnalyticGaussianGate& g, const Vec3& r);

// amplitude * direction * e^{-i k.center} * e^{-l^2 k^2 / 2}
CVec3 gate_fourier(const AnalyticGaussianGate& g, const Vec3& k);

// curl eta = grad delta x direction (direction is constant).
Vec3 gate_curl(const AnalyticGaussianGate& g, const Vec3& r);

// Default sampling lattice: half-extent 7l, spacing l/4 (odd point count,
// symmetric about the gate center). Satisfies the boundary-decay and
// Fourier-consistency requirements with margin.
inline constexpr double grid_min_coverage_widths = 6.0;
inline constexpr double grid_max_spacing_fraction = 0.25;
inline constexpr double grid_default_half_extent_widths = 7.0;

// Node-wise samples of the gate. Preconditions: the lattice covers
// center +/- 6l on every axis and spacing <= l/4; violations throw
// std::invalid_argument naming the failing axis / the resolution.
GridVectorField sample_to_grid(const AnalyticGaussianGate& g, const Vec3& origin,
                               double spacing, const std::array<std::int64_t, 3>& dims);

GridVectorField sample_to_default_grid(const AnalyticGaussianGate& g);

// Discrete transform scaled by spacing^3 and the origin phase so coefficients
// approximate the continuum integral. Requires the boundary-decay invariant.
SpectralVectorField grid_fourier(const GridVectorField& f);

// v - k^(k^.v). Throws std::invalid_argument for k = 0 (the zero mode has no
// transverse decomposition).
CVec3 transverse_part(const CVec3& v, const Vec3& k);

// curl via the dual lattice (ik x in k-space); exact for band-limited decayed
// fields. Requires the boundary-decay invariant.
GridVectorField spectral_curl(const GridVectorField& f);

// ---------------------------------------------------------------------------
// Grid utilities
// ---------------------------------------------------------------------------

// Trapezoid-rule integral of a.b over the (shared) lattice.
double trapezoid_dot(const GridVectorField& a, const GridVectorField& b);

// Trapezoid-rule integral of f.u.
double trapezoid_integral_dot(const GridVectorField& f, const Vec3& u);

// a*f + b*g on a shared lattice.
GridVectorField linear_combination(double a, const GridVectorField& f,
                                   double b, const GridVectorField& g);

// Exact zero-padding of f onto an aligned, containing lattice with the same
// spacing. Misaligned requests throw gatedfield::numeric_error.
GridVectorField zero_extend(const GridVectorField& f, const Vec3& new_origin,
                            const std::array<std::int64_t, 3>& new_dims);

// Hard gate for operations that rely on decayed boundaries (spectral
// transforms, integration by parts). Fields sampled on the default lattice
// pass the much stricter 1e-10 level.
inline constexpr double boundary_decay_hard_limit = 1e-6;
void require_boundary_decay(const GridVectorField& f, const char* context,
                            double tol = boundary_decay_hard_limit);

bool same_lattice(const GridVectorField& a, const GridVectorField& b);

} // namespace gatedfield
