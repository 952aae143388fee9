#ifndef GRAVCAT_SPECIAL_FUNCTIONS_HPP
#define GRAVCAT_SPECIAL_FUNCTIONS_HPP

namespace gravcat {

/// Modified Bessel function K0(x), x > 0.
double bessel_k0(double x);

/// exp(x) * K0(x), stable for large x where K0 underflows.
double bessel_k0_scaled(double x);

} // namespace gravcat

#endif
