#ifndef GRAVCAT_ROTOR_HPP
#define GRAVCAT_ROTOR_HPP

#include <array>
#include <vector>

namespace gravcat {

/// Classical large-N limit: two coupled rotors on S^2 x S^2.
/// b = N kappa / omega_bar, c = N uu / omega_bar.
struct RotorParams {
    double n;
    double omega_bar;
    double b;
    double c;

    void validate() const;
    double uu() const { return c * omega_bar / n; }
};

struct RotorState {
    double xi1, phi1, xi2, phi2;

    void require_valid() const;  // |xi| <= 1
    std::array<double, 4> as_array() const { return {xi1, phi1, xi2, phi2}; }
    static RotorState from_array(const std::array<double, 4>& a) {
        return {a[0], a[1], a[2], a[3]};
    }
};

struct Trajectory {
    std::vector<double> times;
    std::vector<RotorState> states;
    std::vector<double> h_total;  // H / (N omega_bar)
    std::vector<double> h1, h2;   // (1/2)(1+b) xi^2 + (1/2) phi^2 per rotor
    double max_drift = 0.0;       // relative energy drift over the run
};

/// H / (N omega_bar) = -sqrt(1-xi1^2) cos(phi1) - sqrt(1-xi2^2) cos(phi2)
///                     + (b/2)(xi1^2 + xi2^2) - c xi1 xi2.
double total_hamiltonian(const RotorParams& params, const RotorState& state);

/// Hamilton's equations with the bracket {phi, xi} = 1/N:
/// dxi/dt = -(1/N) dH/dphi, dphi/dt = +(1/N) dH/dxi. Analytic
/// derivatives; throws within 1e-9 of the |xi| = 1 chart singularity.
std::array<double, 4> equations_of_motion(const RotorParams& params, const RotorState& state);

/// Fixed-step 8th-order Runge-Kutta with an energy-drift monitor: the
/// step is halved (up to 4 times) until the relative drift stays below
/// 1e-6, else throws with diagnostics. Samples every `record_stride`
/// steps.
Trajectory integrate(const RotorParams& params, const RotorState& state0, double t_end, double dt,
                     int record_stride = 1);

struct NormalModes {
    double omega_plus, omega_minus;  // omega_bar sqrt(1 + b +- c)
    double delta;                    // omega_plus - omega_minus
    double delta_small_c;            // omega_bar c / sqrt(1+b)
};
NormalModes normal_mode_frequencies(const RotorParams& params);

/// Dominant nonzero frequency of a uniformly sampled record (rad/s),
/// by Hann-windowed FFT with quadratic peak interpolation.
double dominant_frequency(const std::vector<double>& samples, double dt);

struct TransferRate {
    double estimate;        // omega_bar N^2 uu, absolute units
    double measured_slope;  // early-time d(h1_abs)/dt from a short run, xi2(0) = 0.5
    double excited_count_coeff;  // N^2 uu: n1(t) ~ coeff * t early on
};
TransferRate energy_transfer_rate(const RotorParams& params);

struct LyapunovEstimate {
    double lambda;  // 1/s
    std::vector<double> trace;  // running estimate at each renormalization
};
LyapunovEstimate lyapunov_estimate(const RotorParams& params, const RotorState& state0,
                                   double t_end, unsigned seed = 0);

} // namespace gravcat

#endif
