#include "gravcat/ggp.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <deque>
#include <stdexcept>

#include "gravcat/detail/tridiag.hpp"

namespace gravcat {

namespace {

// The grid's n samples are treated as one period of length n*h, so the
// reflection x -> -x is the index map i -> n-1-i on a symmetric grid.
struct Fft {
    int n;
    fftw_complex* buf;
    fftw_plan fwd, bwd;

    explicit Fft(int n_) : n(n_) {
        buf = fftw_alloc_complex(n);
        fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~Fft() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(buf);
    }
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;
};

std::vector<double> wavenumbers(int n, double h) {
    std::vector<double> k(n);
    const double dk = 2.0 * M_PI / (n * h);
    for (int j = 0; j < n; ++j) k[j] = dk * (j <= n / 2 ? j : j - n);
    return k;
}

// Spectral second derivative (periodic over n*h; fields decay well
// inside the domain so the wrap-around is negligible).
std::vector<double> second_derivative(const std::vector<double>& f, double h, Fft& fft) {
    const int n = fft.n;
    for (int i = 0; i < n; ++i) fft.buf[i][0] = f[i], fft.buf[i][1] = 0.0;
    fftw_execute(fft.fwd);
    const auto k = wavenumbers(n, h);
    for (int j = 0; j < n; ++j) {
        const double s = -k[j] * k[j] / n;
        fft.buf[j][0] *= s;
        fft.buf[j][1] *= s;
    }
    fftw_execute(fft.bwd);
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = fft.buf[i][0];
    return out;
}

std::vector<double> trapezoid_weights(const Grid1D& grid) {
    std::vector<double> w(grid.n, grid.spacing());
    w.front() *= 0.5;
    w.back() *= 0.5;
    return w;
}

void normalize(std::vector<double>& phi, const std::vector<double>& w) {
    double s = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) s += w[i] * phi[i] * phi[i];
    s = 1.0 / std::sqrt(s);
    for (auto& v : phi) v *= s;
}

struct MeanField {
    std::vector<double> v_eff;  // U + g(N-1) rho + V_grav
    std::vector<double> v_grav;
};

MeanField effective_potential(const GGPProblem& p, const Grid1D& grid,
                              const std::vector<double>& phi) {
    const int n = grid.n;
    std::vector<double> rho(n);
    for (int i = 0; i < n; ++i) rho[i] = phi[i] * phi[i];
    MeanField mf;
    mf.v_grav.assign(n, 0.0);
    if (p.alpha > 0.0 && p.N > 1)
        mf.v_grav = newtonian_convolution(rho, grid, p.eps, p.alpha * (p.N - 1));
    mf.v_eff.resize(n);
    const double gc = p.g * (p.N - 1);
    for (int i = 0; i < n; ++i) mf.v_eff[i] = p.well(grid.x(i)) + gc * rho[i] + mf.v_grav[i];
    return mf;
}

struct Functionals {
    double energy, mu, residual;
};

Functionals functionals(const GGPProblem& p, const Grid1D& grid, const std::vector<double>& phi,
                        Fft& fft) {
    const int n = grid.n;
    const auto w = trapezoid_weights(grid);
    const auto mf = effective_potential(p, grid, phi);
    const auto d2 = second_derivative(phi, grid.spacing(), fft);
    const double gc = p.g * (p.N - 1);

    double ekin = 0.0, epot = 0.0, econ = 0.0, egrav = 0.0, mu = 0.0;
    for (int i = 0; i < n; ++i) {
        const double rho = phi[i] * phi[i];
        ekin += w[i] * phi[i] * (-d2[i] / (2.0 * p.m));
        epot += w[i] * p.well(grid.x(i)) * rho;
        econ += w[i] * 0.5 * gc * rho * rho;
        egrav += w[i] * 0.5 * mf.v_grav[i] * rho;
        mu += w[i] * phi[i] * (-d2[i] / (2.0 * p.m) + mf.v_eff[i] * phi[i]);
    }
    double res = 0.0;
    for (int i = 0; i < n; ++i)
        res = std::max(res, std::abs(-d2[i] / (2.0 * p.m) + (mf.v_eff[i] - mu) * phi[i]));
    return {ekin + epot + econ + egrav, mu, res};
}

void project_parity(std::vector<double>& phi, Parity parity) {
    const int n = static_cast<int>(phi.size());
    for (int i = 0; i < n / 2; ++i) {
        const int j = n - 1 - i;
        const double s = 0.5 * (phi[i] + phi[j]);
        const double a = 0.5 * (phi[i] - phi[j]);
        if (parity == Parity::even)
            phi[i] = phi[j] = s;
        else
            phi[i] = a, phi[j] = -a;
    }
    if (parity == Parity::odd && n % 2 == 1) phi[n / 2] = 0.0;
}

void fix_sign(std::vector<double>& phi, Parity parity) {
    const int n = static_cast<int>(phi.size());
    double s = 0.0;
    for (int i = n / 2; i < n; ++i) s += phi[i];
    if (s < 0.0)
        for (auto& v : phi) v = -v;
    (void)parity;
}

GGPSolution imaginary_time(const GGPProblem& p, const Grid1D& grid, Parity parity) {
    p.validate();
    // The parity map is the index reversal, which needs a symmetric grid.
    const bool symmetric =
        std::abs(grid.x_min + grid.x_max) <= 1e-9 * (grid.x_max - grid.x_min);
    if (parity == Parity::odd && !symmetric)
        throw std::invalid_argument("ggp: odd states need a grid symmetric about 0");
    const int n = grid.n;
    const double h = grid.spacing();
    Fft fft(n);
    const auto w = trapezoid_weights(grid);
    const auto k = wavenumbers(n, h);

    // Gaussian(s) at the minima; sum for even, difference for odd.
    std::vector<double> phi(n);
    const double s0 = std::sqrt(p.m * p.well.Omega);
    for (int i = 0; i < n; ++i) {
        const double xr = grid.x(i) - 0.5 * p.well.L;
        const double xl = grid.x(i) + 0.5 * p.well.L;
        const double gr = std::exp(-0.5 * s0 * s0 * xr * xr);
        const double gl = std::exp(-0.5 * s0 * s0 * xl * xl);
        phi[i] = (parity == Parity::even) ? gr + gl : gr - gl;
    }
    if (symmetric) project_parity(phi, parity);
    normalize(phi, w);

    double dt = 0.5 / p.well.Omega;
    const double dt_min = 1e-5 / p.well.Omega;
    const int max_iter = 400000;
    std::deque<double> trace;
    double e_prev = functionals(p, grid, phi, fft).energy;
    trace.push_back(e_prev);

    GGPSolution sol;
    sol.parity = parity;
    sol.energy_trace.push_back(e_prev);

    // After a step-size change, the state needs ~1/(gap dt) steps to
    // relax to the new fixed point before the plateau test means
    // anything; use Omega as the gap scale.
    long grace = 0;
    auto set_grace = [&] {
        grace = static_cast<long>(std::ceil(3.0 / (p.well.Omega * dt)));
    };

    for (int iter = 1; iter <= max_iter; ++iter) {
        const auto mf = effective_potential(p, grid, phi);
        std::vector<double> trial = phi;
        for (int i = 0; i < n; ++i) trial[i] *= std::exp(-0.5 * dt * mf.v_eff[i]);
        for (int i = 0; i < n; ++i) fft.buf[i][0] = trial[i], fft.buf[i][1] = 0.0;
        fftw_execute(fft.fwd);
        for (int j = 0; j < n; ++j) {
            const double s = std::exp(-dt * k[j] * k[j] / (2.0 * p.m)) / n;
            fft.buf[j][0] *= s;
            fft.buf[j][1] *= s;
        }
        fftw_execute(fft.bwd);
        for (int i = 0; i < n; ++i) trial[i] = fft.buf[i][0];
        for (int i = 0; i < n; ++i) trial[i] *= std::exp(-0.5 * dt * mf.v_eff[i]);
        if (symmetric) project_parity(trial, parity);
        normalize(trial, w);

        const auto f = functionals(p, grid, trial, fft);
        if (f.energy > e_prev + 1e-13 * std::abs(e_prev)) {
            dt *= 0.5;  // reject; the Hartree freeze overstepped
            if (dt < dt_min) break;
            set_grace();
            continue;
        }
        const double rel = std::abs(f.energy - e_prev) / std::max(std::abs(f.energy), 1e-300);
        phi = trial;
        e_prev = f.energy;
        trace.push_back(e_prev);
        if (trace.size() > 12) trace.pop_front();
        sol.energy_trace.push_back(e_prev);
        sol.iterations = iter;
        if (grace > 0) {
            --grace;
            continue;
        }
        if (rel < 1e-12) {
            if (f.residual < 1e-6 * std::abs(f.mu)) {
                fix_sign(phi, parity);
                sol.phi = phi;
                sol.mu = f.mu;
                sol.energy = f.energy;
                sol.residual = f.residual;
                return sol;
            }
            dt *= 0.5;  // plateaued above the residual target: refine the stepper
            if (dt < dt_min) break;
            set_grace();
        }
    }
    std::string msg = "ggp: imaginary time did not converge; energy trace:";
    for (double e : trace) {
        char b[32];
        std::snprintf(b, sizeof b, " %.12e", e);
        msg += b;
    }
    throw std::runtime_error(msg);
}

} // namespace

void GGPProblem::validate() const {
    if (!(m > 0.0)) throw std::domain_error("GGPProblem: m must be > 0");
    if (N < 1) throw std::domain_error("GGPProblem: N must be >= 1");
    if (!(eps > 0.0)) throw std::domain_error("GGPProblem: eps must be > 0");
    if (g < 0.0 || alpha < 0.0) throw std::domain_error("GGPProblem: g, alpha must be >= 0");
}

std::vector<double> newtonian_convolution_direct(const std::vector<double>& density,
                                                 const Grid1D& grid, double eps,
                                                 double alpha_eff) {
    if (!(eps > 0.0)) throw std::domain_error("newtonian_convolution: eps must be > 0");
    const int n = grid.n;
    const auto w = trapezoid_weights(grid);
    std::vector<double> v(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            const double dx = grid.x(i) - grid.x(j);
            s += w[j] * density[j] / std::sqrt(dx * dx + eps * eps);
        }
        v[i] = -alpha_eff * s;
    }
    return v;
}

std::vector<double> newtonian_convolution(const std::vector<double>& density, const Grid1D& grid,
                                          double eps, double alpha_eff) {
    if (!(eps > 0.0)) throw std::domain_error("newtonian_convolution: eps must be > 0");
    const int n = grid.n;
    if (n < 256) return newtonian_convolution_direct(density, grid, eps, alpha_eff);

    // Zero-padded linear convolution; trapezoid end weights folded into
    // the density factor.
    const int M = 2 * n;
    const double h = grid.spacing();
    Fft fft(M);
    std::vector<std::complex<double>> dhat(M), khat(M);
    for (int i = 0; i < M; ++i) {
        const double dv = (i < n) ? density[i] * ((i == 0 || i == n - 1) ? 0.5 * h : h) : 0.0;
        fft.buf[i][0] = dv;
        fft.buf[i][1] = 0.0;
    }
    fftw_execute(fft.fwd);
    for (int i = 0; i < M; ++i) dhat[i] = {fft.buf[i][0], fft.buf[i][1]};
    for (int i = 0; i < M; ++i) {
        const int off = (i <= M / 2) ? i : i - M;  // circular offset i-j
        const double kv = (std::abs(off) <= n - 1) ? 1.0 / std::sqrt(double(off) * off * h * h + eps * eps)
                                                   : 0.0;
        fft.buf[i][0] = kv;
        fft.buf[i][1] = 0.0;
    }
    fftw_execute(fft.fwd);
    for (int i = 0; i < M; ++i) khat[i] = {fft.buf[i][0], fft.buf[i][1]};
    for (int i = 0; i < M; ++i) {
        const std::complex<double> prod = dhat[i] * khat[i] / double(M);
        fft.buf[i][0] = prod.real();
        fft.buf[i][1] = prod.imag();
    }
    fftw_execute(fft.bwd);
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = -alpha_eff * fft.buf[i][0];
    return v;
}

GGPSolution solve_ground_state(const GGPProblem& problem, const Grid1D& grid) {
    return imaginary_time(problem, grid, Parity::even);
}

GGPSolution solve_first_excited(const GGPProblem& problem, const Grid1D& grid) {
    GGPSolution s = imaginary_time(problem, grid, Parity::odd);
    return s;
}

GGPSolution solve_ground_scf(const GGPProblem& problem, const Grid1D& grid) {
    problem.validate();
    const int n = grid.n;
    const double h = grid.spacing();
    const double t = 1.0 / (2.0 * problem.m * h * h);
    const double gc = problem.g * (problem.N - 1);
    const auto w = trapezoid_weights(grid);

    std::vector<double> rho(n, 0.0);
    std::vector<double> d(n), e(n - 1, -t);
    double mu_prev = 0.0;
    GGPSolution sol;
    sol.parity = Parity::even;
    const bool linear = (gc == 0.0 && (problem.alpha == 0.0 || problem.N == 1));
    const double mix = linear ? 1.0 : 0.5;

    for (int iter = 1; iter <= 500; ++iter) {
        std::vector<double> v_grav(n, 0.0);
        if (problem.alpha > 0.0 && problem.N > 1)
            v_grav = newtonian_convolution(rho, grid, problem.eps, problem.alpha * (problem.N - 1));
        for (int i = 0; i < n; ++i)
            d[i] = 2.0 * t + problem.well(grid.x(i)) + gc * rho[i] + v_grav[i];
        const double mu = detail::lowest_eigenvalues(d, e, 1)[0];
        Eigen::VectorXd v = detail::inverse_iteration(d, e, mu);
        v /= std::sqrt(h);
        if (v.sum() < 0.0) v = -v;

        std::vector<double> rho_new(n);
        for (int i = 0; i < n; ++i) rho_new[i] = v(i) * v(i);
        double drho = 0.0;
        for (int i = 0; i < n; ++i) {
            const double nxt = (1.0 - mix) * rho[i] + mix * rho_new[i];
            drho = std::max(drho, std::abs(nxt - rho[i]));
            rho[i] = nxt;
        }
        sol.iterations = iter;
        const bool mu_done = iter > 1 && std::abs(mu - mu_prev) < 1e-12 * std::max(1.0, std::abs(mu));
        mu_prev = mu;
        if ((linear && iter >= 2) || (mu_done && drho < 1e-12)) {
            sol.phi.assign(n, 0.0);
            for (int i = 0; i < n; ++i) sol.phi[i] = v(i);
            normalize(sol.phi, w);
            sol.mu = mu;
            Fft fft(n);
            const auto f = functionals(problem, grid, sol.phi, fft);
            sol.energy = f.energy;
            sol.residual = f.residual;
            return sol;
        }
    }
    throw std::runtime_error("ggp: self-consistent iteration did not converge");
}

TwoModeCoefficients two_mode_coefficients(const GGPSolution& ground, const GGPSolution& excited,
                                          const Grid1D& grid, double d, double eps) {
    if (!(d > 0.0) || !(eps > 0.0))
        throw std::domain_error("two_mode_coefficients: d, eps must be > 0");
    const int n = grid.n;
    if (static_cast<int>(ground.phi.size()) != n || static_cast<int>(excited.phi.size()) != n)
        throw std::invalid_argument("two_mode_coefficients: grid/solution size mismatch");
    if (std::abs(grid.x_min + grid.x_max) > 1e-9 * (grid.x_max - grid.x_min))
        throw std::invalid_argument("two_mode_coefficients: grid must be symmetric about 0");

    double amp0 = 0.0, amp1 = 0.0, even_err = 0.0, odd_err = 0.0;
    for (int i = 0; i < n; ++i) {
        amp0 = std::max(amp0, std::abs(ground.phi[i]));
        amp1 = std::max(amp1, std::abs(excited.phi[i]));
        even_err = std::max(even_err, std::abs(ground.phi[i] - ground.phi[n - 1 - i]));
        odd_err = std::max(odd_err, std::abs(excited.phi[i] + excited.phi[n - 1 - i]));
    }
    if (even_err > 1e-6 * amp0 || odd_err > 1e-6 * amp1)
        throw std::invalid_argument("two_mode_coefficients: parity violation exceeds 1e-6");

    const auto w = trapezoid_weights(grid);
    std::vector<double> psi(n), rho(n), mu(n);
    for (int i = 0; i < n; ++i) psi[i] = (ground.phi[i] + excited.phi[i]) / std::sqrt(2.0);
    for (int i = 0; i < n; ++i) {
        rho[i] = psi[i] * psi[i];
        mu[i] = psi[i] * psi[n - 1 - i];
    }

    TwoModeCoefficients out{};
    out.omega = excited.mu - ground.mu;

    double d0 = 0.0, d1 = 0.0, rtot = 0.0, rright = 0.0;
    for (int i = 0; i < n; ++i) {
        d0 += w[i] * rho[i] * rho[i];
        d1 += w[i] * rho[i] * rho[n - 1 - i];
        rtot += w[i] * rho[i];
        if (grid.x(i) > 0.0) rright += w[i] * rho[i];
    }
    out.delta_0 = d0;
    out.delta_1 = d1;
    out.right_fraction = rright / rtot;
    out.two_mode_valid = out.right_fraction >= 0.99;

    double bP = 0.0, bQ = 0.0, b0 = 0.0, b1 = 0.0;
    double gP = 0.0, gQ = 0.0, g0 = 0.0, g1 = 0.0;
    for (int i = 0; i < n; ++i) {
        if (rho[i] == 0.0 && mu[i] == 0.0) continue;
        double bp = 0.0, bq = 0.0, bm = 0.0, gp = 0.0, gq = 0.0, gm = 0.0;
        const double xi = grid.x(i);
        for (int j = 0; j < n; ++j) {
            const double dx = xi - grid.x(j);
            const double kb = w[j] / std::sqrt(dx * dx + eps * eps);
            const double kg = w[j] / std::sqrt(dx * dx + d * d);
            bp += kb * rho[j];
            bq += kb * rho[n - 1 - j];
            bm += kb * mu[j];
            gp += kg * rho[j];
            gq += kg * rho[n - 1 - j];
            gm += kg * mu[j];
        }
        bP += w[i] * rho[i] * bp;
        bQ += w[i] * rho[i] * bq;
        b0 += w[i] * rho[i] * bm;
        b1 += w[i] * mu[i] * bm;
        gP += w[i] * rho[i] * gp;
        gQ += w[i] * rho[i] * gq;
        g0 += w[i] * rho[i] * gm;
        g1 += w[i] * mu[i] * gm;
    }
    out.beta_plus = 0.5 * (bP + bQ);
    out.beta_minus = 0.5 * (bP - bQ);
    out.beta_0 = b0;
    out.beta_1 = b1;
    out.gammas = {0.5 * (gP + gQ), 0.5 * (gP - gQ), g0, g1};
    return out;
}

} // namespace gravcat
