#include <doctest.h>

#include <cmath>

#include "gravcat/aqt.hpp"
#include "gravcat/constants.hpp"

using namespace gravcat;

TEST_CASE("diosi-penrose rate") {
    // independent SI arithmetic at the benchmark point 1e10 amu, 100 nm
    const double G = 6.67430e-11, hbar = 1.054571817e-34, amu = 1.66053906660e-27;
    const double m = 1e10 * amu, R = 100e-9;
    const double oracle = G * m * m / (hbar * R);
    CHECK(dp_rate(m, R) == doctest::Approx(oracle).epsilon(1e-13));
    CHECK(dp_rate(m, R) == doctest::Approx(1.745e-3).epsilon(1e-3));
    // scaling: quadratic in mass, inverse in radius
    CHECK(dp_rate(2.0 * m, R) == doctest::Approx(4.0 * dp_rate(m, R)).epsilon(1e-12));
    CHECK(dp_rate(m, 2.0 * R) == doctest::Approx(0.5 * dp_rate(m, R)).epsilon(1e-12));
    CHECK_THROWS_AS(dp_rate(0.0, R), std::domain_error);
    CHECK_THROWS_AS(dp_rate(m, -1.0), std::domain_error);
}

TEST_CASE("thermal-gravity rate") {
    CHECK(abh_rate(0.0, 1.0e-19) == doctest::Approx(0.0));
    CHECK(abh_rate(1.0, 0.0) == doctest::Approx(0.0));
    // independent Planck-unit arithmetic at Theta = T_Planck, dE = 1 eV
    const double G = 6.67430e-11, hbar = 1.054571817e-34, c = 299792458.0;
    const double e_planck = std::sqrt(hbar * std::pow(c, 5) / G);
    const double t_planck = hbar / e_planck;
    const double de = 1.602176634e-19 / e_planck;
    CHECK(abh_rate(1.0, 1.602176634e-19) ==
          doctest::Approx(10.0 * de * de / t_planck).epsilon(1e-12));
    CHECK(abh_rate(1.0, 1.602176634e-19) == doctest::Approx(1.244e-12).epsilon(1e-3));
    // linear in Theta, quadratic in dE
    CHECK(abh_rate(3.0, 1e-19) == doctest::Approx(3.0 * abh_rate(1.0, 1e-19)).epsilon(1e-12));
    CHECK(abh_rate(1.0, 2e-19) == doctest::Approx(4.0 * abh_rate(1.0, 1e-19)).epsilon(1e-12));
    CHECK_THROWS_AS(abh_rate(-1.0, 1e-19), std::domain_error);
}

TEST_CASE("lindblad with gamma = 0 reproduces the closed-form unitary evolution") {
    const QubitPairModel m{1.1, 0.4};
    const double t_end = 6.0;
    const auto traj = lindblad_evolve(m, DephasingKind::position, 0.0,
                                      TwoQubitDensity::from_pure(TwoQubitState::gg()), t_end, 100);
    CHECK(traj.max_trace_error < 1e-10);
    CHECK(traj.min_eigenvalue > -1e-8);
    for (std::size_t i = 0; i < traj.times.size(); i += 20) {
        const auto pure = evolve(m, TwoQubitState::gg(), traj.times[i]);
        const auto ref = TwoQubitDensity::from_pure(pure);
        CHECK((traj.rhos[i].matrix - ref.matrix).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("dephasing washes out the purity revivals") {
    const QubitPairModel m{1.0, 0.3};
    const double t_end = 3.0 * M_PI / m.uu;
    // strong position dephasing: coherences decay monotonically
    const auto traj = lindblad_evolve(m, DephasingKind::position, 20.0 * m.uu,
                                      TwoQubitDensity::from_pure(TwoQubitState::eg()), t_end, 200);
    CHECK(traj.max_trace_error < 1e-10);
    const double late = std::abs(traj.rhos.back().matrix(2, 3));
    const double early = std::abs(traj.rhos[5].matrix(2, 3));
    CHECK(late < 1e-6 + 0.01 * (early + 1e-30));
}

TEST_CASE("rabi contrast across damping regimes") {
    const QubitPairModel m{0.0, 1.0};
    CHECK(rabi_contrast(m, DephasingKind::position, 0.0) == doctest::Approx(1.0).epsilon(1e-4));
    // overdamped: no oscillation survives
    CHECK(rabi_contrast(m, DephasingKind::position, 100.0 * m.uu) < 0.02);
    // weak energy dephasing barely bites
    CHECK(rabi_contrast(m, DephasingKind::energy, 0.01 * m.uu) > 0.9);
    // monotone loss of contrast with rate
    double last = 1.1;
    for (double g : {0.0, 0.1, 1.0, 10.0}) {
        const double c = rabi_contrast(m, DephasingKind::position, g);
        CHECK(c < last + 1e-9);
        last = c;
    }
}

TEST_CASE("newton-schroedinger qubit parameters") {
    const DoubleWell well = quartic_well(1.0, 1.0, 6.0);
    const Grid1D grid(-9.0, 9.0, 1025);
    const double eps = 0.05, d = 2.0;

    const QubitPairModel weak = nse_qubit_parameters(well, 1.0, 1e-4, grid, eps, d);
    // alpha -> 0: omega approaches the linear doublet splitting
    GGPProblem lin;
    lin.well = well;
    lin.eps = eps;
    const double split =
        solve_first_excited(lin, grid).mu - solve_ground_state(lin, grid).mu;
    CHECK(weak.omega == doctest::Approx(split).epsilon(1e-2));
    CHECK(weak.uu > 0.0);

    // uu is linear in alpha in the weak-coupling regime
    const QubitPairModel weak2 = nse_qubit_parameters(well, 1.0, 2e-4, grid, eps, d);
    CHECK(weak2.uu / weak.uu == doctest::Approx(2.0).epsilon(1e-2));

    // and matches the point-mass magnitude alpha (1/d - 1/d') / 2
    const double dp = std::hypot(d, well.L);
    CHECK(weak.uu == doctest::Approx(1e-4 * 0.5 * (1.0 / d - 1.0 / dp)).epsilon(0.15));
}

TEST_CASE("comparator table") {
    const auto table = comparator_table();
    REQUIRE(table.size() == 6);
    int simulated = 0;
    for (const auto& e : table) {
        CHECK(!e.model.empty());
        CHECK(!e.note.empty());
        if (e.simulated) ++simulated;
    }
    CHECK(simulated == 3);
    // headline verdicts: DP kills the oscillations, NSE and ABH do not
    CHECK(table[0].simulated);
    CHECK(!table[0].gravcats_survive);
    CHECK(table[1].gravcats_survive);
    CHECK(table[2].gravcats_survive);
}
