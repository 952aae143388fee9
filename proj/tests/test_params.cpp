#include <doctest.h>

#include <cmath>

#include "gravcat/constants.hpp"
#include "gravcat/params.hpp"

using namespace gravcat;

namespace {
// Independent SI arithmetic for the coupling chain, written out from the
// defining formulas rather than calling the library.
double oracle_mho(double m_kg, double d, double L) {
    const double G = 6.67430e-11, hbar = 1.054571817e-34;
    const double dp = std::sqrt(d * d + L * L);
    return G * m_kg * m_kg / (2.0 * hbar) * (1.0 / d - 1.0 / dp);
}
} // namespace

TEST_CASE("gravitational coupling at 1e11 amu") {
    const double m = 1e11 * PhysicalConstants::amu;
    const double alpha = gravitational_coupling(m);
    CHECK(alpha == doctest::Approx(6.67430e-11 * m * m).epsilon(1e-14));
    // order of magnitude: ~1.8e-42 J m at this mass
    CHECK(alpha > 1.5e-42);
    CHECK(alpha < 2.2e-42);
    CHECK(gravitational_coupling_over_hbar(m) ==
          doctest::Approx(alpha / PhysicalConstants::hbar).epsilon(1e-14));
    CHECK_THROWS_AS(gravitational_coupling(0.0), std::domain_error);
    CHECK_THROWS_AS(gravitational_coupling(-1.0), std::domain_error);
}

TEST_CASE("rabi frequency and oscillation period at micron scales") {
    const double m = 1e11 * PhysicalConstants::amu;
    const double d = 1e-6, L = 1e-6;
    const double mho = rabi_frequency(gravitational_coupling(m), d, L);
    CHECK(mho == doctest::Approx(oracle_mho(m, d, L)).epsilon(1e-13));
    // hundreds-to-thousands of seconds for the 2 pi / mho period
    const double period = 2.0 * M_PI / mho;
    CHECK(period > 1e2);
    CHECK(period < 1e4);

    PhysicalParams p{m, d, L, {}, {}};
    CHECK(rabi_frequency(p) == doctest::Approx(mho).epsilon(1e-14));
    CHECK(p.d_prime() == doctest::Approx(std::sqrt(2.0) * 1e-6).epsilon(1e-14));
}

TEST_CASE("mass_for_period inverts the rabi frequency") {
    const double d = 1e-6, L = 1e-6;
    const double m = mass_for_period(60.0, d, L);
    const double mho = rabi_frequency(gravitational_coupling(m), d, L);
    CHECK(2.0 * M_PI / mho == doctest::Approx(60.0).epsilon(1e-10));
    // minute-scale periods need ~1e11..1e12 amu
    const double m_amu = m / PhysicalConstants::amu;
    CHECK(m_amu > 1e11);
    CHECK(m_amu < 1e12);
}

TEST_CASE("rabi frequency scaling and domain errors") {
    const double alpha = 1.0;
    const double base = rabi_frequency(alpha, 1.0, 1.0);
    CHECK(rabi_frequency(4.0 * alpha, 1.0, 1.0) == doctest::Approx(4.0 * base));
    // widening d weakens the coupling
    CHECK(rabi_frequency(alpha, 2.0, 1.0) < base);
    CHECK_THROWS_AS(rabi_frequency(alpha, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(rabi_frequency(alpha, 1.0, -1.0), std::domain_error);
}

TEST_CASE("ohmic rate limits") {
    const double eta = 0.01, omega = 1e3;
    // T = 0: pure quantum noise, Gamma = eta omega
    CHECK(ohmic_rate(eta, omega, 0.0) == doctest::Approx(eta * omega).epsilon(1e-12));
    // high temperature: coth -> 2 kB T / (hbar omega), so the omega cancels
    const double T = 300.0;
    const double classical = 2.0 * eta * PhysicalConstants::kB * T / PhysicalConstants::hbar;
    CHECK(ohmic_rate(eta, omega, T) == doctest::Approx(classical).epsilon(1e-6));
    CHECK(ohmic_rate(eta, 10.0 * omega, T) == doctest::Approx(classical).epsilon(1e-5));
    CHECK_THROWS_AS(ohmic_rate(-1.0, omega, 0.0), std::domain_error);
}

TEST_CASE("natural value round trip") {
    const auto v = NaturalValue::from_si(3.0e-6, 1e-6);
    CHECK(v.value == doctest::Approx(3.0));
    CHECK(v.to_si() == doctest::Approx(3.0e-6));
    CHECK_THROWS_AS(NaturalValue::from_si(1.0, 0.0), std::domain_error);
}

TEST_CASE("physical params validation") {
    PhysicalParams ok{1.0, 1.0, 1.0, {}, {}};
    CHECK_NOTHROW(ok.validate());
    PhysicalParams bad{0.0, 1.0, 1.0, {}, {}};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}
