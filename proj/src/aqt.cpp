#include "gravcat/aqt.hpp"

#include <cmath>
#include <stdexcept>

#include "gravcat/constants.hpp"

namespace gravcat {

namespace {

constexpr std::complex<double> I_UNIT{0.0, 1.0};

// Local Paulis in the fixed |e,e>, |g,g>, |e,g>, |g,e> basis order.
Matrix4c sigma_x_q1() {
    Matrix4c m = Matrix4c::Zero();
    m(0, 3) = m(3, 0) = 1.0;
    m(1, 2) = m(2, 1) = 1.0;
    return m;
}
Matrix4c sigma_x_q2() {
    Matrix4c m = Matrix4c::Zero();
    m(0, 2) = m(2, 0) = 1.0;
    m(1, 3) = m(3, 1) = 1.0;
    return m;
}
Matrix4c sigma_z_q1() {
    Matrix4c m = Matrix4c::Zero();
    m.diagonal() << 1.0, -1.0, 1.0, -1.0;
    return m;
}
Matrix4c sigma_z_q2() {
    Matrix4c m = Matrix4c::Zero();
    m.diagonal() << 1.0, -1.0, -1.0, 1.0;
    return m;
}

Matrix4c liouvillian(const Matrix4c& h, const Matrix4c& l1, const Matrix4c& l2, double gamma,
                     const Matrix4c& rho) {
    Matrix4c d = -I_UNIT * (h * rho - rho * h);
    if (gamma > 0.0) d += gamma * (l1 * rho * l1 - rho) + gamma * (l2 * rho * l2 - rho);
    return d;
}

} // namespace

double dp_rate(double mass_kg, double radius_m) {
    if (!(mass_kg > 0.0) || !(radius_m > 0.0))
        throw std::domain_error("dp_rate: mass and radius must be > 0");
    return PhysicalConstants::G * mass_kg * mass_kg / (PhysicalConstants::hbar * radius_m);
}

double abh_rate(double theta_planck, double de_joule) {
    if (theta_planck < 0.0 || de_joule < 0.0)
        throw std::domain_error("abh_rate: theta and dE must be >= 0");
    constexpr double c = 299792458.0;
    const double e_planck =
        std::sqrt(PhysicalConstants::hbar * c * c * c * c * c / PhysicalConstants::G);
    const double t_planck = PhysicalConstants::hbar / e_planck;
    const double de = de_joule / e_planck;
    return 10.0 * theta_planck * de * de / t_planck;
}

LindbladTrajectory lindblad_evolve(const QubitPairModel& model, DephasingKind kind, double gamma,
                                   const TwoQubitDensity& rho0, double t_end, int n_records) {
    model.validate();
    if (gamma < 0.0) throw std::domain_error("lindblad_evolve: gamma must be >= 0");
    if (!(t_end > 0.0) || n_records < 2)
        throw std::invalid_argument("lindblad_evolve: t_end > 0 and n_records >= 2 required");

    const Matrix4c h = hamiltonian_matrix(model).cast<std::complex<double>>();
    const Matrix4c l1 = (kind == DephasingKind::position) ? sigma_x_q1() : sigma_z_q1();
    const Matrix4c l2 = (kind == DephasingKind::position) ? sigma_x_q2() : sigma_z_q2();

    const double scale = std::max({model.omega_prime(), gamma, 1.0 / t_end});
    const double dt_target = 0.01 / scale;
    const long n_steps = std::max<long>(n_records, static_cast<long>(std::ceil(t_end / dt_target)));
    const double dt = t_end / n_steps;
    const long stride = std::max<long>(1, n_steps / n_records);

    LindbladTrajectory out;
    Matrix4c rho = rho0.matrix;
    auto record = [&](double t) {
        out.times.push_back(t);
        out.rhos.push_back({rho});
        out.max_trace_error = std::max(out.max_trace_error, std::abs(rho.trace().real() - 1.0));
        Eigen::SelfAdjointEigenSolver<Matrix4c> es(0.5 * (rho + rho.adjoint()));
        out.min_eigenvalue = std::min(out.min_eigenvalue, es.eigenvalues().minCoeff());
    };
    record(0.0);
    for (long i = 0; i < n_steps; ++i) {
        const Matrix4c k1 = liouvillian(h, l1, l2, gamma, rho);
        const Matrix4c k2 = liouvillian(h, l1, l2, gamma, rho + 0.5 * dt * k1);
        const Matrix4c k3 = liouvillian(h, l1, l2, gamma, rho + 0.5 * dt * k2);
        const Matrix4c k4 = liouvillian(h, l1, l2, gamma, rho + dt * k3);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if ((i + 1) % stride == 0 || i == n_steps - 1) record((i + 1) * dt);
    }
    if (out.max_trace_error > 1e-10)
        throw std::runtime_error("lindblad_evolve: trace drift exceeds 1e-10");
    if (out.min_eigenvalue < -1e-8)
        throw std::runtime_error("lindblad_evolve: density matrix lost positivity");
    return out;
}

double rabi_contrast(const QubitPairModel& model, DephasingKind kind, double gamma) {
    if (!(model.uu > 0.0)) throw std::domain_error("rabi_contrast: uu must be > 0");
    // Population of |g,e> at the coherent maximum minus the coherent
    // minimum: sin^2(uu t) peaks at t = pi/(2 uu) and returns to zero at
    // pi/uu, so the difference is 1 for unitary motion and ~0 once the
    // oscillation is washed out (the population then relaxes
    // monotonically toward its incoherent value).
    const double period = M_PI / model.uu;
    const auto traj = lindblad_evolve(model, kind, gamma,
                                      TwoQubitDensity::from_pure(TwoQubitState::eg()), period, 400);
    double at_max = 0.0;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        if (std::abs(traj.times[i] - 0.5 * period) < 0.51 * (period / 400.0))
            at_max = std::max(at_max, traj.rhos[i].matrix(3, 3).real());
    }
    const double at_min = traj.rhos.back().matrix(3, 3).real();
    return std::max(0.0, at_max - at_min);
}

QubitPairModel nse_qubit_parameters(const DoubleWell& well, double m, double alpha,
                                    const Grid1D& grid, double eps, double d) {
    GGPProblem p;
    p.well = well;
    p.m = m;
    p.g = 0.0;
    p.alpha = alpha;
    p.N = 2;  // (N-1) alpha = alpha: single-particle NSE self-coupling
    p.eps = eps;
    const GGPSolution g0 = solve_ground_state(p, grid);
    const GGPSolution g1 = solve_first_excited(p, grid);
    const TwoModeCoefficients tm = two_mode_coefficients(g0, g1, grid, d, eps);
    QubitPairModel model{tm.omega, alpha * tm.gammas.gamma_minus};
    model.validate();
    return model;
}

std::vector<ComparatorEntry> comparator_table() {
    return {
        {"Diosi-Penrose", true, false,
         "position-basis collapse at Gamma = GM^2/(hbar R); Gamma/uu ~ D/R >> 1 kills the "
         "oscillations"},
        {"Newton-Schroedinger", true, true,
         "nonlinear single-particle equation; no decoherence term, parameters re-derived from NSE "
         "stationary states"},
        {"thermal gravity (ABH)", true, true,
         "energy-basis dephasing at Gamma = 10 Theta dE^2 (Planck units); far below uu for "
         "laboratory masses"},
        {"GRW", false, false, "mass-proportional spontaneous localization; documented bound only"},
        {"Power-Percival", false, false, "stochastic phase kicks; documented bound only"},
        {"Asprea-Gasbarri-Bassi", false, false,
         "gravitational decoherence with stringent published bounds; documented only"},
    };
}

} // namespace gravcat
