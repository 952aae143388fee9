#include "gravcat/double_well.hpp"

namespace gravcat {

double DoubleWell::turning_point() const {
    const double target = 0.5 * Omega;
    double lo = 0.0, hi = 0.5 * L;
    if (potential(lo) <= target)
        throw std::domain_error("DoubleWell: barrier lower than Omega/2, no turning point");
    // U decreases from the barrier top toward the minimum; bisect U(a) = Omega/2.
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (potential(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

void DoubleWell::validate(double m) const {
    if (!(L > 0.0) || !(Omega > 0.0) || !(m > 0.0))
        throw std::domain_error("DoubleWell: L, Omega, m must be > 0");
    const double scale = std::max(1.0, std::abs(potential(0.0)));
    for (int i = 0; i <= 32; ++i) {
        const double x = (i / 32.0) * 0.75 * L;
        if (std::abs(potential(x) - potential(-x)) > 1e-12 * scale)
            throw std::domain_error("DoubleWell: potential is not even");
    }
    if (std::abs(potential(0.5 * L)) > 1e-9 * scale)
        throw std::domain_error("DoubleWell: U(L/2) must vanish");
    const double h = 1e-4 * L;
    const double curv =
        (potential(0.5 * L + h) - 2.0 * potential(0.5 * L) + potential(0.5 * L - h)) / (h * h);
    if (std::abs(curv - m * Omega * Omega) > 1e-3 * m * Omega * Omega)
        throw std::domain_error("DoubleWell: U''(L/2) must equal m Omega^2");
}

DoubleWell quartic_well(double m, double Omega, double L) {
    if (!(m > 0.0) || !(Omega > 0.0) || !(L > 0.0))
        throw std::domain_error("quartic_well: m, Omega, L must be > 0");
    const double A = m * Omega * Omega / (2.0 * L * L);
    const double q = 0.25 * L * L;
    DoubleWell w;
    w.potential = [A, q](double x) {
        const double u = x * x - q;
        return A * u * u;
    };
    w.L = L;
    w.Omega = Omega;
    return w;
}

DoubleWell harmonic_well(double m, double Omega, double L_hint) {
    DoubleWell w;
    w.potential = [m, Omega](double x) { return 0.5 * m * Omega * Omega * x * x; };
    w.L = L_hint;
    w.Omega = Omega;
    return w;
}

} // namespace gravcat
