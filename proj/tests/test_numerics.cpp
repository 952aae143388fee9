#include <doctest.h>

#include <cmath>

#include "gravcat/detail/tridiag.hpp"
#include "gravcat/double_well.hpp"
#include "gravcat/grid.hpp"
#include "gravcat/quadrature.hpp"
#include "gravcat/special_functions.hpp"

using namespace gravcat;

TEST_CASE("adaptive quadrature against closed forms") {
    CHECK(integrate_adaptive([](double x) { return x * x; }, 0.0, 3.0) ==
          doctest::Approx(9.0).epsilon(1e-12));
    CHECK(integrate_adaptive([](double x) { return std::exp(-x * x); }, -8.0, 8.0) ==
          doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    CHECK(integrate_adaptive([](double x) { return std::sin(40.0 * x); }, 0.0, M_PI) ==
          doctest::Approx((1.0 - std::cos(40.0 * M_PI)) / 40.0).epsilon(1e-10));
    // integrable endpoint behaviour (all nodes interior): sqrt
    CHECK(integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("gauss-legendre rule exactness") {
    GaussLegendreRule rule(8);
    REQUIRE(rule.nodes.size() == 8);
    double w_sum = 0.0;
    for (double w : rule.weights) w_sum += w;
    CHECK(w_sum == doctest::Approx(2.0).epsilon(1e-14));
    // an n-point rule is exact through degree 2n-1 = 15
    for (int p : {3, 9, 15}) {
        double q = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            q += rule.weights[i] * std::pow(rule.nodes[i], p);
        CHECK(std::abs(q) < 1e-14);  // odd powers vanish
    }
    double q14 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        q14 += rule.weights[i] * std::pow(rule.nodes[i], 14);
    CHECK(q14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("composite panels and 2d tensor product") {
    GaussLegendreRule rule(12);
    const double q = integrate_panels([](double x) { return std::cos(x); }, 0.0, 2.0, 8, rule);
    CHECK(q == doctest::Approx(std::sin(2.0)).epsilon(1e-13));
    const double q2 = integrate_2d([](double x, double y) { return x * x + y; }, 0.0, 1.0, 4, 8);
    // int_0^1 int_0^1 (x^2 + y) = 1/3 + 1/2
    CHECK(q2 == doctest::Approx(1.0 / 3.0 + 0.5).epsilon(1e-13));
    const double gauss2 = integrate_2d(
        [](double x, double y) { return std::exp(-(x * x + y * y)); }, -6.0, 6.0, 24, 10);
    CHECK(gauss2 == doctest::Approx(M_PI).epsilon(1e-10));
}

TEST_CASE("bessel k0 against the standard library") {
    for (double x : {0.01, 0.1, 1.0, 3.0, 12.5, 60.0}) {
        CHECK(bessel_k0(x) == doctest::Approx(std::cyl_bessel_k(0.0, x)).epsilon(1e-12));
        CHECK(bessel_k0_scaled(x) ==
              doctest::Approx(std::exp(x) * std::cyl_bessel_k(0.0, x)).epsilon(1e-12));
    }
    // large argument where plain K0 underflows: leading asymptote
    // sqrt(pi / 2x) (1 - 1/8x + ...)
    const double x = 900.0;
    const double asym = std::sqrt(M_PI / (2.0 * x)) * (1.0 - 1.0 / (8.0 * x));
    CHECK(bessel_k0_scaled(x) == doctest::Approx(asym).epsilon(1e-5));
}

TEST_CASE("grid basics") {
    Grid1D g(-2.0, 2.0, 101);
    CHECK(g.spacing() == doctest::Approx(0.04));
    CHECK(g.x(0) == doctest::Approx(-2.0));
    CHECK(g.x(100) == doctest::Approx(2.0));
    CHECK(g.points().size() == 101);
    const Grid1D r = g.refined();
    CHECK(r.n == 201);
    CHECK(r.spacing() == doctest::Approx(0.02));
    CHECK_THROWS_AS(Grid1D(0.0, 1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(1.0, 0.0, 100), std::invalid_argument);
}

TEST_CASE("double well family") {
    const double m = 1.0, Omega = 2.0, L = 3.0;
    DoubleWell w = quartic_well(m, Omega, L);
    CHECK(w(L / 2) == doctest::Approx(0.0));
    CHECK(w(-L / 2) == doctest::Approx(0.0));
    CHECK(w(0.0) == doctest::Approx(m * Omega * Omega * L * L / 32.0).epsilon(1e-13));
    CHECK_NOTHROW(w.validate(m));
    // curvature at the minimum: numerical second derivative = m Omega^2
    const double h = 1e-5;
    const double upp = (w(L / 2 + h) - 2.0 * w(L / 2) + w(L / 2 - h)) / (h * h);
    CHECK(upp == doctest::Approx(m * Omega * Omega).epsilon(1e-5));
    // inner turning point solves U(a) = Omega / 2
    const double a = w.turning_point();
    CHECK(a > 0.0);
    CHECK(a < L / 2);
    CHECK(w(a) == doctest::Approx(Omega / 2.0).epsilon(1e-8));

    DoubleWell asym = w;
    asym.potential = [w](double x) { return w(x) + 0.1 * x; };
    CHECK_THROWS_AS(asym.validate(m), std::domain_error);
}

TEST_CASE("tridiagonal eigensolver on the harmonic oscillator") {
    // FD discretization of -(1/2) d2/dx2 + (1/2) x^2: eigenvalues n + 1/2
    const int n = 4001;
    const double a = -12.0, h = 24.0 / (n - 1);
    std::vector<double> d(n), e(n - 1, -0.5 / (h * h));
    for (int i = 0; i < n; ++i) {
        const double x = a + i * h;
        d[i] = 1.0 / (h * h) + 0.5 * x * x;
    }
    const auto ev = detail::lowest_eigenvalues(d, e, 4);
    for (int k = 0; k < 4; ++k) CHECK(ev[k] == doctest::Approx(k + 0.5).epsilon(1e-5));
    // eigenvector residual
    const Eigen::VectorXd v = detail::inverse_iteration(d, e, ev[0]);
    double resid = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = (d[i] - ev[0]) * v(i);
        if (i > 0) r += e[i - 1] * v(i - 1);
        if (i < n - 1) r += e[i] * v(i + 1);
        resid = std::max(resid, std::abs(r));
    }
    CHECK(resid < 1e-8);
    // ground state has no sign change
    int flips = 0;
    for (int i = 1; i < n; ++i)
        if (v(i) * v(i - 1) < 0.0 && std::abs(v(i)) > 1e-10 && std::abs(v(i - 1)) > 1e-10) ++flips;
    CHECK(flips == 0);
}
