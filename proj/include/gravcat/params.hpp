#ifndef GRAVCAT_PARAMS_HPP
#define GRAVCAT_PARAMS_HPP

#include <cmath>
#include <optional>
#include <stdexcept>

#include "gravcat/constants.hpp"

namespace gravcat {

/// SI inputs describing a pair of trapped particles on parallel axes.
/// d is the inter-axis separation, L the well separation along each axis.
struct PhysicalParams {
    double m;  // particle mass (kg)
    double d;  // inter-axis separation (m)
    double L;  // well separation (m)
    std::optional<double> Omega;  // small-oscillation trap frequency (rad/s)
    std::optional<double> T;      // environment temperature (K)

    void validate() const {
        if (!(m > 0.0)) throw std::domain_error("PhysicalParams: m must be > 0");
        if (!(d > 0.0)) throw std::domain_error("PhysicalParams: d must be > 0");
        if (!(L > 0.0)) throw std::domain_error("PhysicalParams: L must be > 0");
    }

    /// Diagonal separation d' = sqrt(d^2 + L^2).
    double d_prime() const { return std::hypot(d, L); }
};

/// A dimensionless number together with the SI scale used to
/// nondimensionalize it. value * scale recovers the SI quantity.
struct NaturalValue {
    double value;
    double scale;

    static NaturalValue from_si(double si, double scale) {
        if (!(scale > 0.0)) throw std::domain_error("NaturalValue: scale must be > 0");
        return {si / scale, scale};
    }
    double to_si() const { return value * scale; }
};

/// Gravitational coupling alpha = G m^2 in J*m.
double gravitational_coupling(double m);

/// alpha / hbar: the frequency*length form used in rate formulas (rad/s * m).
double gravitational_coupling_over_hbar(double m);

/// Rabi frequency of the gravitational coupling,
/// mho = (alpha / 2 hbar) (1/d - 1/d'), in rad/s.
double rabi_frequency(double alpha, double d, double L);

/// Convenience: mho directly from SI parameters.
double rabi_frequency(const PhysicalParams& p);

/// Ohmic-environment dissipation/relaxation rate estimate
/// Gamma = eta * omega * coth(hbar omega / 2 kB T), in 1/s.
/// eta is the dimensionless environment coupling (often written alpha
/// in the literature; renamed here to avoid collision with G m^2).
double ohmic_rate(double eta, double omega, double T);

/// Particle mass giving Rabi period t_period at separations (d, L).
/// Inverts mho = (G m^2 / 2 hbar)(1/d - 1/d') for m; result in kg.
double mass_for_period(double t_period, double d, double L);

} // namespace gravcat

#endif
