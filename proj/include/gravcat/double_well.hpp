#ifndef GRAVCAT_DOUBLE_WELL_HPP
#define GRAVCAT_DOUBLE_WELL_HPP

#include <cmath>
#include <functional>
#include <stdexcept>

namespace gravcat {

/// Symmetric double-well potential U(x) with minima at +-L/2, U(+-L/2) = 0
/// and U''(+-L/2) = m Omega^2. Natural units, hbar = 1.
struct DoubleWell {
    std::function<double(double)> potential;
    double L;      // minima separation
    double Omega;  // small-oscillation frequency at the minima

    double operator()(double x) const { return potential(x); }

    /// Inner turning point a in (0, L/2) where U(a) = Omega/2.
    double turning_point() const;

    /// Sampled symmetry / normalization checks. m is the particle mass
    /// used in the curvature condition U''(L/2) = m Omega^2.
    void validate(double m) const;
};

/// Default test family: quartic U(x) = (m Omega^2 / 2 L^2) (x^2 - L^2/4)^2.
/// Barrier height m Omega^2 L^2 / 32 grows with both Omega and L.
DoubleWell quartic_well(double m, double Omega, double L);

/// Single-minimum harmonic well U = (1/2) m Omega^2 x^2 (for oracle
/// sanity checks; L is retained only as a domain hint).
DoubleWell harmonic_well(double m, double Omega, double L_hint = 1.0);

} // namespace gravcat

#endif
