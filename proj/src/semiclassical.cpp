#include "gravcat/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gravcat/detail/tridiag.hpp"
#include "gravcat/quadrature.hpp"
#include "gravcat/special_functions.hpp"

namespace gravcat {

namespace {

using detail::inverse_iteration;
using detail::lowest_eigenvalues;

void build_fd(const DoubleWell& well, double m, const Grid1D& grid, std::vector<double>& d,
              std::vector<double>& e) {
    const double h = grid.spacing();
    const double t = 1.0 / (2.0 * m * h * h);
    d.resize(grid.n);
    e.assign(grid.n - 1, -t);
    for (int i = 0; i < grid.n; ++i) d[i] = 2.0 * t + well(grid.x(i));
}

SpectrumTriple spectrum_on(const DoubleWell& well, double m, const Grid1D& grid) {
    std::vector<double> d, e;
    build_fd(well, m, grid, d, e);
    const auto ev = lowest_eigenvalues(d, e, 3);
    return {ev[0], ev[1], ev[2]};
}

// Simpson weights on a uniform grid with an odd number of points.
std::vector<double> simpson_weights(int n, double h) {
    if (n % 2 == 0) throw std::invalid_argument("simpson_weights: need odd point count");
    std::vector<double> w(n, 0.0);
    for (int i = 1; i < n - 1; i += 2) w[i] = 4.0;
    for (int i = 2; i < n - 1; i += 2) w[i] = 2.0;
    w[0] = w[n - 1] = 1.0;
    for (auto& wi : w) wi *= h / 3.0;
    return w;
}

} // namespace

double ModeFunction::right_fraction() const {
    const auto w = simpson_weights(static_cast<int>(grid.size()), spacing());
    double total = 0.0, right = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double c = w[i] * values[i] * values[i];
        total += c;
        if (grid[i] > 0.0) right += c;
    }
    return right / total;
}

void ModeFunction::require_symmetric_grid() const {
    const std::size_t n = grid.size();
    if (n % 2 == 0 || n != values.size())
        throw std::invalid_argument("ModeFunction: need odd, matching grid/value counts");
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(grid[i] + grid[n - 1 - i]) > 1e-9 * (grid.back() - grid.front()))
            throw std::invalid_argument("ModeFunction: grid must be symmetric about 0");
}

double wkb_energy_split(const DoubleWell& well, double m) {
    well.validate(m);
    const double L = well.L, Om = well.Omega;
    auto integrand = [&](double x) {
        const double U = well(x);
        return Om * std::sqrt(m / (2.0 * U)) - 1.0 / (0.5 * L - x) - 2.0 * std::sqrt(2.0 * m * U);
    };
    double I;
    try {
        I = integrate_adaptive(integrand, 0.0, 0.5 * L, 1e-9, 1e-12);
    } catch (const std::runtime_error&) {
        throw std::runtime_error("wkb_energy_split: barrier quadrature did not converge");
    }
    return Om * L * std::sqrt(m * Om / M_PI) * std::exp(I);
}

SpectrumTriple schrodinger_splitting_oracle(const DoubleWell& well, double m, const Grid1D& grid,
                                            double drift_tol) {
    const double osc_len = 1.0 / std::sqrt(m * well.Omega);
    if (grid.spacing() > osc_len / 10.0)
        throw std::invalid_argument(
            "schrodinger_splitting_oracle: grid must resolve the oscillator length with >= 10 points");
    const SpectrumTriple coarse = spectrum_on(well, m, grid);
    const SpectrumTriple fine = spectrum_on(well, m, grid.refined());
    const double scale = fine.e2 - fine.e0;
    const double drift = std::max({std::abs(coarse.e0 - fine.e0), std::abs(coarse.e1 - fine.e1),
                                   std::abs(coarse.e2 - fine.e2)});
    if (drift > drift_tol * scale)
        throw std::runtime_error("schrodinger_splitting_oracle: eigenvalues not grid-converged");
    return fine;
}

EigenPairs lowest_eigenpairs(const DoubleWell& well, double m, const Grid1D& grid, int k) {
    std::vector<double> d, e;
    build_fd(well, m, grid, d, e);
    EigenPairs out;
    out.energies = lowest_eigenvalues(d, e, k);
    const double h = grid.spacing();
    for (int j = 0; j < k; ++j) {
        Eigen::VectorXd v = inverse_iteration(d, e, out.energies[j]);
        v /= std::sqrt(h);  // unit integral of phi^2
        out.states.push_back(v);
    }
    return out;
}

ModeFunction semiclassical_mode(const DoubleWell& well, double m, int n_points) {
    well.validate(m);
    const double L = well.L, Om = well.Omega;
    const double lam = std::sqrt(m * Om) * L;
    if (lam < 5.0)
        throw std::domain_error("semiclassical_mode: sqrt(m Omega) L < 5, outside validity");
    if (well(0.0) <= 1.5 * Om)
        throw std::domain_error("semiclassical_mode: barrier too low for the barrier branch");
    const double a = well.turning_point();

    // Matching point: one quantum above the doublet energy, where the
    // barrier-branch prefactor is regular.
    double lo = 0.0, hi = a;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (well(mid) > Om)
            lo = mid;
        else
            hi = mid;
    }
    const double xm = 0.5 * (lo + hi);

    if (n_points % 2 == 0) ++n_points;
    const double xmax = 0.5 * L + 8.0 / std::sqrt(m * Om);
    ModeFunction mode;
    mode.grid.resize(n_points);
    mode.values.assign(n_points, 0.0);
    const double h = 2.0 * xmax / (n_points - 1);
    for (int i = 0; i < n_points; ++i) mode.grid[i] = -xmax + i * h;

    auto gaussian = [&](double x) {
        return std::pow(m * Om / M_PI, 0.25) * std::exp(-0.5 * m * Om * (x - 0.5 * L) * (x - 0.5 * L));
    };
    auto momentum = [&](double x) {
        const double u = well(x) - 0.5 * Om;
        return (u > 0.0) ? std::sqrt(2.0 * m * u) : 0.0;
    };
    // Barrier branch, unit scale: (2m[U - Om/2])^(-1/4) exp(S(x)), S(0) = 0.
    auto prefactor = [&](double x) {
        const double u = well(x) - 0.5 * Om;
        return std::pow(2.0 * m * u, -0.25);
    };
    const double S_match = integrate_adaptive(momentum, 0.0, xm, 1e-10, 1e-14);
    const double scale = gaussian(xm) / (prefactor(xm) * std::exp(S_match));
    if (!std::isfinite(scale) || scale <= 0.0)
        throw std::runtime_error("semiclassical_mode: branch matching failed");

    for (int i = 0; i < n_points; ++i) {
        const double x = mode.grid[i];
        if (x >= xm) {
            mode.values[i] = gaussian(x);
        } else if (x > -a && well(x) > 0.5 * Om * (1.0 + 1e-9)) {
            const double S = integrate_adaptive(momentum, 0.0, x, 1e-10, 1e-14);
            mode.values[i] = scale * prefactor(x) * std::exp(S);
        }
    }

    // Continuity audit: a branch-matching failure shows up as a jump,
    // i.e. a second difference comparable to the local value. Smooth
    // variation contributes only O(h^2 psi''). The left tail (x < 0) is
    // excluded: the (U - Om/2)^(-1/4) prefactor diverges at the far
    // turning point, so large relative second differences there are the
    // expected breakdown of the form, not a matching failure.
    for (int i = 1; i + 1 < n_points; ++i) {
        if (mode.grid[i - 1] < 0.0) continue;
        const double big =
            std::max({std::abs(mode.values[i - 1]), std::abs(mode.values[i]), std::abs(mode.values[i + 1])});
        if (big < 1e-3 * gaussian(0.5 * L)) continue;
        const double jump = std::abs(mode.values[i + 1] - 2.0 * mode.values[i] + mode.values[i - 1]);
        if (jump > 0.05 * big) throw std::runtime_error("semiclassical_mode: discontinuity exceeds 5%");
    }

    const auto w = simpson_weights(n_points, h);
    double norm = 0.0;
    for (int i = 0; i < n_points; ++i) norm += w[i] * mode.values[i] * mode.values[i];
    mode.normalization = norm;
    const double s = 1.0 / std::sqrt(norm);
    for (auto& v : mode.values) v *= s;
    return mode;
}

ModeFunction gaussian_mode(double m, double Omega, double L, int n_points, double margin) {
    if (n_points % 2 == 0) ++n_points;
    const double xmax = 0.5 * L + margin / std::sqrt(m * Omega);
    ModeFunction mode;
    mode.grid.resize(n_points);
    mode.values.resize(n_points);
    const double h = 2.0 * xmax / (n_points - 1);
    const double amp = std::pow(m * Omega / M_PI, 0.25);
    for (int i = 0; i < n_points; ++i) {
        const double x = -xmax + i * h;
        mode.grid[i] = x;
        mode.values[i] = amp * std::exp(-0.5 * m * Omega * (x - 0.5 * L) * (x - 0.5 * L));
    }
    const auto w = simpson_weights(n_points, h);
    double norm = 0.0;
    for (int i = 0; i < n_points; ++i) norm += w[i] * mode.values[i] * mode.values[i];
    mode.normalization = norm;
    const double s = 1.0 / std::sqrt(norm);
    for (auto& v : mode.values) v *= s;
    return mode;
}

OverlapSet overlap_coefficients(const ModeFunction& mode, double d) {
    if (!(d > 0.0)) throw std::domain_error("overlap_coefficients: d must be > 0");
    mode.require_symmetric_grid();
    const int n = static_cast<int>(mode.grid.size());
    const auto w = simpson_weights(n, mode.spacing());

    std::vector<double> rho(n), mu(n);
    for (int i = 0; i < n; ++i) {
        rho[i] = mode.values[i] * mode.values[i];
        mu[i] = mode.values[i] * mode.values[n - 1 - i];  // psi0(x) psi0(-x)
    }

    double P = 0.0, Q = 0.0, g0 = 0.0, g1 = 0.0;
    for (int i = 0; i < n; ++i) {
        if (rho[i] == 0.0 && mu[i] == 0.0) continue;
        double rowP = 0.0, rowQ = 0.0, row0 = 0.0, row1 = 0.0;
        const double xi = mode.grid[i];
        for (int j = 0; j < n; ++j) {
            const double dx = xi - mode.grid[j];
            const double k = w[j] / std::sqrt(d * d + dx * dx);
            rowP += k * rho[j];
            rowQ += k * rho[n - 1 - j];
            row0 += k * mu[j];
            row1 += k * mu[j];
        }
        P += w[i] * rho[i] * rowP;
        Q += w[i] * rho[i] * rowQ;
        g0 += w[i] * rho[i] * row0;
        g1 += w[i] * mu[i] * row1;
    }
    return {0.5 * (P + Q), 0.5 * (P - Q), g0, g1};
}

AsymptoticOverlaps overlap_asymptotics(double m, double Omega, double L, double d, double omega,
                                       const DoubleWell& well) {
    if (!(d > 0.0)) throw std::domain_error("overlap_asymptotics: d must be > 0");
    const double x = m * Omega * d * d / 8.0;
    const double sum = std::sqrt(m * Omega / M_PI) * bessel_k0_scaled(x);
    const double dp = std::hypot(d, L);
    const double diff = 2.0 / dp;

    // Barrier integrals over the forbidden region.
    const double a = well.turning_point();
    auto inv_sqrt_u = [&](double xx) { return 1.0 / std::sqrt(well(xx)); };
    const double g0_int = integrate_adaptive(
        [&](double xx) { return inv_sqrt_u(xx) / std::sqrt(d * d + (0.5 * L - xx) * (0.5 * L - xx)); },
        -a, a, 1e-8, 1e-12);
    const double g0 = omega * std::sqrt(m) / (2.0 * std::sqrt(2.0)) * g0_int;

    const double g1_int = integrate_2d(
        [&](double x1, double x2) {
            return 1.0 / (std::sqrt(well(x1) * well(x2)) * std::sqrt(d * d + (x1 - x2) * (x1 - x2)));
        },
        -a, a, 32, 8);
    const double g1 = m * omega * omega / 8.0 * g1_int;

    AsymptoticOverlaps out;
    out.overlaps = {0.5 * (sum + diff), 0.5 * (sum - diff), g0, g1};
    out.refined_mho_over_alpha = 0.5 * sum - 1.0 / dp;
    return out;
}

Eigen::Matrix4d interaction_matrix(double omega, double alpha, const OverlapSet& ov) {
    const double gp = ov.gamma_plus, gm = ov.gamma_minus, g0 = ov.gamma_0, g1 = ov.gamma_1;
    Eigen::Matrix4d V = Eigen::Matrix4d::Zero();
    // Basis |e,e>, |g,g>, |e,g>, |g,e>.
    V(0, 0) = omega - alpha * (gp + g1 - 2.0 * g0);
    V(1, 1) = -omega - alpha * (gp + g1 + 2.0 * g0);
    V(0, 1) = V(1, 0) = -alpha * gm;
    V(2, 2) = V(3, 3) = -alpha * (gp - g1);
    V(2, 3) = V(3, 2) = -alpha * gm;
    return V;
}

} // namespace gravcat
