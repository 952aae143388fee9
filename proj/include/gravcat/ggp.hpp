#ifndef GRAVCAT_GGP_HPP
#define GRAVCAT_GGP_HPP

#include <string>
#include <vector>

#include "gravcat/double_well.hpp"
#include "gravcat/grid.hpp"
#include "gravcat/semiclassical.hpp"

namespace gravcat {

/// Mean-field problem: contact coupling g plus the softened Newtonian
/// self-interaction -alpha (N-1) int rho / sqrt(dx^2 + eps^2).
/// Natural units, hbar = 1.
struct GGPProblem {
    DoubleWell well;
    double m = 1.0;
    double g = 0.0;      // contact coupling, energy * length
    double alpha = 0.0;  // G m^2, energy * length
    int N = 1;
    double eps = 0.0;    // kernel softening length

    void validate() const;
};

enum class Parity { even, odd };

struct GGPSolution {
    std::vector<double> phi;  // real, unit integral of phi^2
    double mu = 0.0;
    double energy = 0.0;   // per-particle energy functional at convergence
    double residual = 0.0; // max-norm of (H_eff - mu) phi
    Parity parity = Parity::even;
    int iterations = 0;
    std::vector<double> energy_trace;  // energy at every accepted step
};

/// Softened Newtonian potential of a normalized density:
/// -alpha_eff int density(x') / sqrt((x - x')^2 + eps^2) dx'.
/// FFT-accelerated linear convolution for large grids.
std::vector<double> newtonian_convolution(const std::vector<double>& density, const Grid1D& grid,
                                          double eps, double alpha_eff);

/// O(n^2) direct sum, same quantity (oracle path).
std::vector<double> newtonian_convolution_direct(const std::vector<double>& density,
                                                 const Grid1D& grid, double eps, double alpha_eff);

/// Imaginary-time ground state (parity even).
GGPSolution solve_ground_state(const GGPProblem& problem, const Grid1D& grid);

/// Imaginary-time first excited state via odd-parity projection.
GGPSolution solve_first_excited(const GGPProblem& problem, const Grid1D& grid);

/// Independent solver path: self-consistent iteration of the frozen
/// mean-field linear eigenproblem (finite differences). Used to
/// cross-check the imaginary-time path.
GGPSolution solve_ground_scf(const GGPProblem& problem, const Grid1D& grid);

/// Two-mode reduction of a ground/excited pair: psi0 = (phi0 + phi1)/sqrt(2),
/// quartic-density integrals delta_0/delta_1, same-axis beta overlaps with
/// the softened kernel, inter-axis gamma overlaps with the d kernel.
struct TwoModeCoefficients {
    double omega;    // mu1 - mu0
    double delta_0;  // int psi0^4
    double delta_1;  // int psi0^2 psi0bar^2
    double beta_plus, beta_minus, beta_0, beta_1;
    OverlapSet gammas;
    double right_fraction;  // localization of psi0 on x > 0
    bool two_mode_valid;    // right_fraction >= 0.99
};

TwoModeCoefficients two_mode_coefficients(const GGPSolution& ground, const GGPSolution& excited,
                                          const Grid1D& grid, double d, double eps);

} // namespace gravcat

#endif
