#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "gravcat/qubit_pair.hpp"

using namespace gravcat;

namespace {

// Scaling-and-squaring matrix exponential on 4x4, independent of the
// closed-form path under test.
Matrix4c expm(const Matrix4c& a) {
    const double norm = a.cwiseAbs().maxCoeff();
    int s = 0;
    double scale = 1.0;
    while (norm * scale > 0.25) {
        scale *= 0.5;
        ++s;
    }
    Matrix4c x = a * scale;
    Matrix4c term = Matrix4c::Identity();
    Matrix4c sum = Matrix4c::Identity();
    for (int k = 1; k <= 20; ++k) {
        term = term * x / double(k);
        sum += term;
    }
    for (int i = 0; i < s; ++i) sum = sum * sum;
    return sum;
}

} // namespace

TEST_CASE("hamiltonian matrix structure") {
    QubitPairModel m{2.0, 0.7};
    const Matrix4d h = hamiltonian_matrix(m);
    CHECK(h(0, 0) == doctest::Approx(2.0));
    CHECK(h(1, 1) == doctest::Approx(-2.0));
    CHECK(h(0, 1) == doctest::Approx(-0.7));
    CHECK(h(2, 3) == doctest::Approx(-0.7));
    CHECK(h(2, 2) == doctest::Approx(0.0));
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    // block structure: no mixing between {ee,gg} and {eg,ge}
    CHECK(h(0, 2) == 0.0);
    CHECK(h(1, 3) == 0.0);
    const Matrix4d shifted = hamiltonian_matrix(m, 1.5);
    CHECK(shifted(2, 2) == doctest::Approx(1.5));
}

TEST_CASE("spectrum closed form") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.01, 5.0);
    for (int i = 0; i < 50; ++i) {
        QubitPairModel m{u(rng), u(rng)};
        Eigen::SelfAdjointEigenSolver<Matrix4d> es(hamiltonian_matrix(m));
        const double wp = m.omega_prime();
        std::array<double, 4> want{-wp, -m.uu, m.uu, wp};
        std::sort(want.begin(), want.end());
        for (int k = 0; k < 4; ++k)
            CHECK(es.eigenvalues()(k) == doctest::Approx(want[k]).epsilon(1e-12));
    }
}

TEST_CASE("closed-form evolution vs matrix exponential") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.01, 3.0);
    for (int i = 0; i < 30; ++i) {
        QubitPairModel m{u(rng), u(rng)};
        const double t = u(rng);
        const Matrix4c uc = evolution_operator(m, t);
        const Matrix4c ue = expm(std::complex<double>(0.0, -1.0) *
                                 hamiltonian_matrix(m).cast<std::complex<double>>() * t);
        CHECK((uc - ue).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((uc * uc.adjoint() - Matrix4c::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("uu = 0 leaves populations frozen") {
    QubitPairModel m{1.3, 0.0};
    const auto s = evolve(m, TwoQubitState::eg(), 17.0);
    CHECK(std::norm(s.amplitudes(2)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(purity_deficit(s) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("purity deficit closed form vs partial trace") {
    QubitPairModel m{1.0, 0.4};
    const double wp = m.omega_prime();
    const double r2 = (m.uu * m.uu) / (wp * wp);
    for (double t : {0.3, 1.7, 4.0, 9.1}) {
        const auto s = evolve(m, TwoQubitState::gg(), t);
        const double sn = std::sin(wp * t);
        const double closed = 2.0 * r2 * sn * sn * (1.0 - r2 * sn * sn);
        CHECK(purity_deficit(s) == doctest::Approx(closed).epsilon(1e-10));
        // direct partial-trace oracle
        const Matrix2c rho1 = reduced_density_qubit1(s);
        CHECK(1.0 - (rho1 * rho1).trace().real() == doctest::Approx(closed).epsilon(1e-10));
    }
}

TEST_CASE("ground state") {
    QubitPairModel m{1.0, 0.5};
    const auto g = ground_state(m);
    g.require_normalized();
    const Matrix4d h = hamiltonian_matrix(m);
    const Eigen::Vector4d v = g.amplitudes.real();
    CHECK((h * v + m.omega_prime() * v).cwiseAbs().maxCoeff() < 1e-12);
    // both amplitudes positive, dominated by |g,g>
    CHECK(v(0) > 0.0);
    CHECK(v(1) > v(0));
    CHECK(v(2) == 0.0);

    // uncoupled limit: plain |g,g>
    const auto g0 = ground_state(QubitPairModel{1.0, 0.0});
    CHECK(std::abs(g0.amplitudes(1)) == doctest::Approx(1.0));

    // entanglement of the ground state: purity deficit = uu^2 / (2 wp^2)
    const double wp = m.omega_prime();
    CHECK(purity_deficit(g) == doctest::Approx(m.uu * m.uu / (2.0 * wp * wp)).epsilon(1e-12));
}

TEST_CASE("resonant rabi transfer") {
    QubitPairModel m{2.2, 0.31};
    for (double t : {0.0, 0.5, 2.0, 7.7}) {
        const auto s = evolve(m, TwoQubitState::eg(), t);
        const double want = std::sin(m.uu * t) * std::sin(m.uu * t);
        CHECK(std::norm(s.amplitudes(3)) == doctest::Approx(want).epsilon(1e-10));
        CHECK(rabi_population(m, t) == doctest::Approx(want).epsilon(1e-12));
    }
    // full transfer at uu t = pi/2 regardless of omega
    const auto s = evolve(m, TwoQubitState::eg(), 0.5 * M_PI / m.uu);
    CHECK(std::norm(s.amplitudes(3)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("density evolution consistency") {
    QubitPairModel m{0.9, 0.6};
    const auto s0 = TwoQubitState::ee();
    const auto st = evolve(m, s0, 2.5);
    const auto rho = TwoQubitDensity::from_pure(st);
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(purity_deficit(rho) == doctest::Approx(purity_deficit(st)).epsilon(1e-12));
}

TEST_CASE("validation errors") {
    CHECK_THROWS_AS((QubitPairModel{-1.0, 0.0}.validate()), std::domain_error);
    TwoQubitState s = TwoQubitState::ee();
    s.amplitudes *= 2.0;
    CHECK_THROWS_AS(s.require_normalized(), std::invalid_argument);
}
