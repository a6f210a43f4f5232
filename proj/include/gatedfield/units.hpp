#pragma once

#include <string>

namespace gatedfield {

// Dimension tags carried by boundary-crossing quantities. Internally the
// toolkit is fully dimensionless (hbar = c = 1, lengths in units of the
// reference length L0); these tags only matter at the SI boundary.
enum class Dimension {
    length,
    wavenumber,
    energy_density,
    field_squared_product,
    intensity,
    dimensionless,
};

const char* dimension_name(Dimension d);

struct Quantity {
    double value = 0.0;
    Dimension dimension = Dimension::dimensionless;
};

// Conversion layer between the dimensionless internal convention and SI.
//
// One internal unit of each dimension corresponds to:
//   length                : L0
//   wavenumber            : 1/L0
//   energy density        : hbar*c / L0^4
//   field-squared product : hbar*c / L0^4   (E.H carries energy-density units)
//   intensity             : hbar*c^2 / L0^4
//
// hbar is derived as h/(2*pi) so the h/hbar consistency invariant holds to
// machine precision.
class UnitSystem {
public:
    UnitSystem(double reference_length_m, double h_si, double c_si);

    // All four constants explicit; validates hbar = h/(2*pi) to 1e-12 relative.
    UnitSystem(double reference_length_m, double hbar_si, double c_si, double h_si);

    static UnitSystem codata(double reference_length_m);
    // hc = 2e-25 J*m, c = 3e8 m/s: the rounded constants used in
    // paper-constants reproduction mode.
    static UnitSystem rounded_reference(double reference_length_m);

    double reference_length() const { return reference_length_; }
    double hbar() const { return hbar_; }
    double c() const { return c_; }
    double h() const { return h_; }

    // SI value of one internal unit of dimension d.
    double si_unit_factor(Dimension d) const;

    double to_internal(const Quantity& q) const;
    Quantity from_internal(double x, Dimension d) const;

private:
    void validate() const;

    double reference_length_;
    double hbar_;
    double c_;
    double h_;
};

} // namespace gatedfield
