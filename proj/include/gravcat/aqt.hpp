#ifndef GRAVCAT_AQT_HPP
#define GRAVCAT_AQT_HPP

#include <string>
#include <vector>

#include "gravcat/ggp.hpp"
#include "gravcat/qubit_pair.hpp"

namespace gravcat {

/// Diosi-Penrose collapse rate Gamma = G M^2 / (hbar R), SI inputs.
double dp_rate(double mass_kg, double radius_m);

/// Thermal-gravity (ABH) energy-basis decoherence rate
/// Gamma = 10 Theta (Delta E)^2, evaluated in Planck units and returned
/// in 1/s: theta is the bath temperature in units of the Planck
/// temperature, de_joule the energy gap in joules. Warns (return-value
/// flag not raised) only through the comparator; theta > 1 is allowed.
double abh_rate(double theta_planck, double de_joule);

enum class DephasingKind {
    position,  // local sigma_x (localized |+->) dephasing, DP phenomenology
    energy,    // local sigma_z dephasing, ABH phenomenology
};

struct LindbladTrajectory {
    std::vector<double> times;
    std::vector<TwoQubitDensity> rhos;
    double max_trace_error = 0.0;
    double min_eigenvalue = 0.0;
};

/// Fixed-step RK4 on the vectorized master equation
/// drho/dt = -i[H, rho] + Gamma sum_k (L_k rho L_k - rho), L_k the local
/// Pauli of the chosen basis on each qubit. Trace monitored to 1e-10,
/// eigenvalues to -1e-8.
LindbladTrajectory lindblad_evolve(const QubitPairModel& model, DephasingKind kind, double gamma,
                                   const TwoQubitDensity& rho0, double t_end, int n_records = 200);

/// Largest |e,g> -> |g,e> transfer probability over one Rabi period
/// under dephasing; 1 in the unitary limit.
double rabi_contrast(const QubitPairModel& model, DephasingKind kind, double gamma);

/// Qubit parameters re-derived from stationary Newton-Schroedinger
/// solutions: the ggp solver with g = 0 and unit Hartree prefactor
/// (N = 2, so (N-1) alpha = alpha); omega = mu1 - mu0 and
/// uu = alpha gamma_- of the localized combination.
QubitPairModel nse_qubit_parameters(const DoubleWell& well, double m, double alpha,
                                    const Grid1D& grid, double eps, double d);

struct ComparatorEntry {
    std::string model;
    bool simulated;         // has a quantitative path in this artifact
    bool gravcats_survive;  // qualitative verdict
    std::string note;
};
std::vector<ComparatorEntry> comparator_table();

} // namespace gravcat

#endif
