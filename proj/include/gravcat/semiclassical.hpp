#ifndef GRAVCAT_SEMICLASSICAL_HPP
#define GRAVCAT_SEMICLASSICAL_HPP

#include <Eigen/Dense>
#include <vector>

#include "gravcat/double_well.hpp"
#include "gravcat/grid.hpp"

namespace gravcat {

/// Right-localized mode function sampled on a uniform grid symmetric
/// about x = 0 (grid[n-1-i] == -grid[i], n odd).
struct ModeFunction {
    std::vector<double> grid;
    std::vector<double> values;
    double normalization = 0.0;  // integral of psi^2 before rescaling

    double spacing() const { return grid[1] - grid[0]; }
    /// Fraction of the norm carried by x > 0.
    double right_fraction() const;
    void require_symmetric_grid() const;
};

/// Overlap coefficients of the mode densities against the inter-axis
/// Coulomb kernel 1/sqrt(d^2 + (x1-x2)^2). Units 1/length.
struct OverlapSet {
    double gamma_plus;
    double gamma_minus;
    double gamma_0;
    double gamma_1;
};

/// Three lowest eigenvalues of -(1/2m) d^2/dx^2 + U.
struct SpectrumTriple {
    double e0, e1, e2;
    double splitting() const { return e1 - e0; }
    /// Two-level validity monitor omega / (E2 - Eg).
    double validity_ratio() const { return (e1 - e0) / (e2 - e0); }
};

/// Tunneling splitting from the semiclassical barrier formula: the
/// action integral over half the barrier with the 1/(L/2 - x)
/// counterterm that removes the harmonic endpoint divergence.
double wkb_energy_split(const DoubleWell& well, double m);

/// Finite-difference eigensolver on the given grid; ground truth for
/// wkb_energy_split. Throws if eigenvalues drift by more than
/// `drift_tol` (relative to E2 - E0) under grid doubling.
SpectrumTriple schrodinger_splitting_oracle(const DoubleWell& well, double m,
                                            const Grid1D& grid, double drift_tol = 1e-6);

/// Lowest k eigenpairs of the same finite-difference Hamiltonian.
/// Eigenvectors are normalized to unit integral of phi^2.
struct EigenPairs {
    std::vector<double> energies;
    std::vector<Eigen::VectorXd> states;
};
EigenPairs lowest_eigenpairs(const DoubleWell& well, double m, const Grid1D& grid, int k);

/// Piecewise semiclassical mode: harmonic-oscillator Gaussian in the
/// allowed region, decaying barrier form inside, zero left of the
/// outer turning point. Normalized to unit integral of psi^2.
ModeFunction semiclassical_mode(const DoubleWell& well, double m, int n_points = 2001);

/// Pure Gaussian of the right well, as a ModeFunction (reference mode
/// for the asymptotic overlap regime).
ModeFunction gaussian_mode(double m, double Omega, double L, int n_points = 2001,
                           double margin = 8.0);

/// The four overlap integrals by 2D composite quadrature on the mode
/// grid. d > 0 keeps the kernel smooth.
OverlapSet overlap_coefficients(const ModeFunction& mode, double d);

/// Closed-form asymptotics of the overlaps for sqrt(m Omega) L >> 1:
/// Bessel-K0 form for gamma+ + gamma-, 2/d' for gamma+ - gamma-, and
/// barrier integrals for gamma_0, gamma_1.
struct AsymptoticOverlaps {
    OverlapSet overlaps;
    /// Refined Rabi coupling per unit alpha:
    /// (1/2) sqrt(mOmega/pi) e^x K0(x) - 1/d', x = m Omega d^2 / 8.
    double refined_mho_over_alpha;
};
AsymptoticOverlaps overlap_asymptotics(double m, double Omega, double L, double d, double omega,
                                       const DoubleWell& well);

/// 4x4 interaction matrix on the span of |e,e>, |g,g>, |e,g>, |g,e>
/// including the gamma_0, gamma_1 corrections and the constant
/// -alpha(gamma_plus - gamma_1) shift. Reduces to the two-qubit
/// Hamiltonian plus the -alpha gamma_plus constant when
/// gamma_0 = gamma_1 = 0.
Eigen::Matrix4d interaction_matrix(double omega, double alpha, const OverlapSet& overlaps);

/// Quoted relative error of restricting to the lowest doublet.
inline double two_level_error(double omega, double Omega) {
    return (omega / Omega) * (omega / Omega);
}

} // namespace gravcat

#endif
