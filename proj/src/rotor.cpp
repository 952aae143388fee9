#include "gravcat/rotor.hpp"

#include <fftw3.h>

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace gravcat {

namespace {

using StateArr = std::array<double, 4>;

struct Flow {
    const RotorParams& p;
    void operator()(const StateArr& s, StateArr& dsdt, double) const {
        dsdt = equations_of_motion(p, RotorState::from_array(s));
    }
};

using Stepper = boost::numeric::odeint::runge_kutta_fehlberg78<StateArr>;

double h_single(const RotorParams& p, double xi, double phi) {
    return 0.5 * (1.0 + p.b) * xi * xi + 0.5 * phi * phi;
}

} // namespace

void RotorParams::validate() const {
    if (!(n > 0.0) || !(omega_bar > 0.0))
        throw std::domain_error("RotorParams: n, omega_bar must be > 0");
    if (!(1.0 + b - std::abs(c) > 0.0))
        throw std::domain_error("RotorParams: 1 + b - |c| <= 0, small oscillations unstable");
}

void RotorState::require_valid() const {
    if (std::abs(xi1) > 1.0 || std::abs(xi2) > 1.0)
        throw std::domain_error("RotorState: |xi| must be <= 1");
}

double total_hamiltonian(const RotorParams& params, const RotorState& state) {
    state.require_valid();
    return -std::sqrt(1.0 - state.xi1 * state.xi1) * std::cos(state.phi1) -
           std::sqrt(1.0 - state.xi2 * state.xi2) * std::cos(state.phi2) +
           0.5 * params.b * (state.xi1 * state.xi1 + state.xi2 * state.xi2) -
           params.c * state.xi1 * state.xi2;
}

std::array<double, 4> equations_of_motion(const RotorParams& params, const RotorState& s) {
    if (std::abs(s.xi1) > 1.0 - 1e-9 || std::abs(s.xi2) > 1.0 - 1e-9)
        throw std::domain_error("equations_of_motion: |xi| ~ 1 chart singularity");
    const double w = params.omega_bar;
    const double r1 = std::sqrt(1.0 - s.xi1 * s.xi1);
    const double r2 = std::sqrt(1.0 - s.xi2 * s.xi2);
    // H = N omega_bar * Hbar(xi, phi); the 1/N of the bracket cancels N.
    const double dxi1 = -w * r1 * std::sin(s.phi1);
    const double dxi2 = -w * r2 * std::sin(s.phi2);
    const double dphi1 = w * (s.xi1 * std::cos(s.phi1) / r1 + params.b * s.xi1 - params.c * s.xi2);
    const double dphi2 = w * (s.xi2 * std::cos(s.phi2) / r2 + params.b * s.xi2 - params.c * s.xi1);
    return {dxi1, dphi1, dxi2, dphi2};
}

Trajectory integrate(const RotorParams& params, const RotorState& state0, double t_end, double dt,
                     int record_stride) {
    params.validate();
    state0.require_valid();
    if (!(t_end > 0.0) || !(dt > 0.0) || record_stride < 1)
        throw std::invalid_argument("integrate: t_end, dt, record_stride must be positive");

    const double e0 = total_hamiltonian(params, state0);
    const double e_scale = std::max(std::abs(e0), 1e-3);
    Flow flow{params};

    for (int attempt = 0; attempt <= 4; ++attempt, dt *= 0.5, record_stride *= 2) {
        Stepper stepper;
        StateArr s = state0.as_array();
        const long n_steps = static_cast<long>(std::ceil(t_end / dt));
        Trajectory traj;
        traj.times.reserve(n_steps / record_stride + 2);
        bool ok = true;

        auto record = [&](double t, const StateArr& a) {
            const RotorState rs = RotorState::from_array(a);
            const double e = total_hamiltonian(params, rs);
            traj.max_drift = std::max(traj.max_drift, std::abs(e - e0) / e_scale);
            traj.times.push_back(t);
            traj.states.push_back(rs);
            traj.h_total.push_back(e);
            traj.h1.push_back(h_single(params, rs.xi1, rs.phi1));
            traj.h2.push_back(h_single(params, rs.xi2, rs.phi2));
        };
        record(0.0, s);
        for (long i = 0; i < n_steps && ok; ++i) {
            const double h = std::min(dt, t_end - i * dt);
            stepper.do_step(flow, s, i * dt, h);
            if ((i + 1) % record_stride == 0 || i == n_steps - 1) {
                record(std::min((i + 1) * dt, t_end), s);
                if (traj.max_drift > 1e-6) ok = false;
            }
        }
        if (ok) return traj;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "integrate: energy drift above 1e-6 after 4 step halvings (t_end %.3e)", t_end);
    throw std::runtime_error(buf);
}

NormalModes normal_mode_frequencies(const RotorParams& params) {
    params.validate();
    const double w = params.omega_bar;
    NormalModes m;
    m.omega_plus = w * std::sqrt(1.0 + params.b + params.c);
    m.omega_minus = w * std::sqrt(1.0 + params.b - params.c);
    m.delta = m.omega_plus - m.omega_minus;
    m.delta_small_c = w * params.c / std::sqrt(1.0 + params.b);
    return m;
}

double dominant_frequency(const std::vector<double>& samples, double dt) {
    const int n = static_cast<int>(samples.size());
    if (n < 16 || !(dt > 0.0))
        throw std::invalid_argument("dominant_frequency: need >= 16 samples, dt > 0");
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= n;

    std::vector<double> in(n);
    for (int i = 0; i < n; ++i) {
        const double hann = 0.5 * (1.0 - std::cos(2.0 * M_PI * i / (n - 1)));
        in[i] = (samples[i] - mean) * hann;
    }
    std::vector<double> mag(n / 2 + 1);
    {
        fftw_complex* out = fftw_alloc_complex(n / 2 + 1);
        fftw_plan plan = fftw_plan_dft_r2c_1d(n, in.data(), out, FFTW_ESTIMATE);
        fftw_execute(plan);
        for (int k = 0; k <= n / 2; ++k) mag[k] = std::hypot(out[k][0], out[k][1]);
        fftw_destroy_plan(plan);
        fftw_free(out);
    }
    int peak = 1;
    for (int k = 2; k < n / 2; ++k)
        if (mag[k] > mag[peak]) peak = k;
    // quadratic interpolation on log magnitude
    double shift = 0.0;
    if (peak > 1 && peak < n / 2 - 1 && mag[peak - 1] > 0.0 && mag[peak + 1] > 0.0) {
        const double lm = std::log(mag[peak - 1]), l0 = std::log(mag[peak]),
                     lp = std::log(mag[peak + 1]);
        const double den = lm - 2.0 * l0 + lp;
        if (den < 0.0) shift = 0.5 * (lm - lp) / den;
    }
    return 2.0 * M_PI * (peak + shift) / (n * dt);
}

TransferRate energy_transfer_rate(const RotorParams& params) {
    params.validate();
    TransferRate out;
    const double uu = params.uu();
    out.estimate = params.omega_bar * params.n * params.n * uu;
    out.excited_count_coeff = params.n * params.n * uu;
    if (uu == 0.0) {
        out.measured_slope = 0.0;
        return out;
    }

    // Short run from the Fig.-2-style initial condition; the early-time
    // slope is the steepest h1 growth before a quarter beat.
    const NormalModes nm = normal_mode_frequencies(params);
    const double delta = std::max(std::abs(nm.delta), 1e-12 * params.omega_bar);
    const double t_end = 0.5 * M_PI / delta;  // quarter beat period
    const double dt = 0.01 * 2.0 * M_PI / nm.omega_plus;
    const Trajectory traj = integrate(params, {0.0, 0.0, 0.5, 0.0}, t_end, dt, 5);

    double slope = 0.0;
    const double e_abs = params.n * params.omega_bar;  // h1 is in units of N omega_bar
    for (std::size_t i = 1; i < traj.times.size(); ++i) {
        const double s =
            e_abs * (traj.h1[i] - traj.h1[i - 1]) / (traj.times[i] - traj.times[i - 1]);
        slope = std::max(slope, s);
    }
    out.measured_slope = slope;
    return out;
}

LyapunovEstimate lyapunov_estimate(const RotorParams& params, const RotorState& state0,
                                   double t_end, unsigned seed) {
    params.validate();
    state0.require_valid();
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateArr d{};
    double norm = 0.0;
    for (auto& v : d) {
        v = gauss(rng);
        norm += v * v;
    }
    const double d0 = 1e-8;
    norm = std::sqrt(norm);
    StateArr a = state0.as_array(), b = a;
    for (int i = 0; i < 4; ++i) b[i] += d0 * d[i] / norm;

    const double tau = 1.0 / params.omega_bar;  // renormalization interval
    const int n_ren = std::max(8, static_cast<int>(t_end / tau));
    const double dt = tau / 64.0;
    Stepper stepper;
    Flow flow{params};

    LyapunovEstimate out;
    double sum_log = 0.0;
    double t = 0.0;
    for (int k = 0; k < n_ren; ++k) {
        for (int i = 0; i < 64; ++i) {
            stepper.do_step(flow, a, t, dt);
            stepper.do_step(flow, b, t, dt);
            t += dt;
        }
        double dist = 0.0;
        for (int i = 0; i < 4; ++i) dist += (b[i] - a[i]) * (b[i] - a[i]);
        dist = std::sqrt(dist);
        if (dist <= 0.0) dist = 1e-300;
        sum_log += std::log(dist / d0);
        for (int i = 0; i < 4; ++i) b[i] = a[i] + (b[i] - a[i]) * (d0 / dist);
        out.trace.push_back(sum_log / t);
    }
    out.lambda = sum_log / t;
    return out;
}

} // namespace gravcat
