#include "gravcat/params.hpp"

#include <cmath>

namespace gravcat {

double gravitational_coupling(double m) {
    if (!(m > 0.0)) throw std::domain_error("gravitational_coupling: m must be > 0");
    return PhysicalConstants::G * m * m;
}

double gravitational_coupling_over_hbar(double m) {
    return gravitational_coupling(m) / PhysicalConstants::hbar;
}

double rabi_frequency(double alpha, double d, double L) {
    if (!(d > 0.0)) throw std::domain_error("rabi_frequency: d must be > 0");
    if (L < 0.0) throw std::domain_error("rabi_frequency: L must be >= 0");
    const double dp = std::hypot(d, L);
    return alpha / (2.0 * PhysicalConstants::hbar) * (1.0 / d - 1.0 / dp);
}

double rabi_frequency(const PhysicalParams& p) {
    p.validate();
    return rabi_frequency(gravitational_coupling(p.m), p.d, p.L);
}

double ohmic_rate(double eta, double omega, double T) {
    if (eta < 0.0) throw std::domain_error("ohmic_rate: eta must be >= 0");
    if (!(omega > 0.0)) throw std::domain_error("ohmic_rate: omega must be > 0");
    if (T < 0.0) throw std::domain_error("ohmic_rate: T must be >= 0");
    if (T == 0.0) return eta * omega;  // coth -> 1
    const double x = PhysicalConstants::hbar * omega / (2.0 * PhysicalConstants::kB * T);
    // coth(x), stable for both large and small arguments
    const double coth = (x > 350.0) ? 1.0 : 1.0 / std::tanh(x);
    return eta * omega * coth;
}

double mass_for_period(double t_period, double d, double L) {
    if (!(t_period > 0.0)) throw std::domain_error("mass_for_period: period must be > 0");
    const double mho = 2.0 * M_PI / t_period;
    const double dp = std::hypot(d, L);
    const double geom = 0.5 * (1.0 / d - 1.0 / dp);
    if (!(geom > 0.0)) throw std::domain_error("mass_for_period: L must be > 0");
    // mho = G m^2 geom / hbar
    return std::sqrt(mho * PhysicalConstants::hbar / (PhysicalConstants::G * geom));
}

} // namespace gravcat
