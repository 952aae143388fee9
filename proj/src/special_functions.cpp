#include "gravcat/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace gravcat {

double bessel_k0(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k0: x must be > 0");
    return std::cyl_bessel_k(0.0, x);
}

double bessel_k0_scaled(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k0_scaled: x must be > 0");
    if (x < 600.0) return std::exp(x) * std::cyl_bessel_k(0.0, x);
    // Asymptotic series K0(x) ~ sqrt(pi/2x) e^-x (1 - 1/8x + 9/128x^2 - ...)
    const double ix = 1.0 / x;
    const double series = 1.0 + ix * (-1.0 / 8.0 + ix * (9.0 / 128.0 + ix * (-225.0 / 3072.0)));
    return std::sqrt(M_PI / (2.0 * x)) * series;
}

} // namespace gravcat
