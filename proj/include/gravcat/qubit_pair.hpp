#ifndef GRAVCAT_QUBIT_PAIR_HPP
#define GRAVCAT_QUBIT_PAIR_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <stdexcept>

namespace gravcat {

using Matrix4c = Eigen::Matrix4cd;
using Matrix4d = Eigen::Matrix4d;
using Vector4c = Eigen::Vector4cd;
using Matrix2c = Eigen::Matrix2cd;

/// Two coupled double-well qubits: level splitting omega and
/// gravitational Rabi coupling uu (both rad/s, hbar = 1).
struct QubitPairModel {
    double omega;  // level splitting
    double uu;     // Rabi coupling mho

    void validate() const {
        if (omega < 0.0 || uu < 0.0)
            throw std::domain_error("QubitPairModel: omega and uu must be >= 0");
    }
    double omega_prime() const { return std::hypot(omega, uu); }
};

/// Pure state in the ordered basis |e,e>, |g,g>, |e,g>, |g,e>.
/// This basis order is fixed globally; all 4x4 matrices in this module
/// are written against it.
struct TwoQubitState {
    Vector4c amplitudes;

    double norm() const { return amplitudes.norm(); }
    void require_normalized(double tol = 1e-10) const {
        if (std::abs(norm() - 1.0) > tol)
            throw std::invalid_argument("TwoQubitState: state not normalized");
    }

    static TwoQubitState basis(int k) {
        TwoQubitState s;
        s.amplitudes.setZero();
        s.amplitudes(k) = 1.0;
        return s;
    }
    static TwoQubitState ee() { return basis(0); }
    static TwoQubitState gg() { return basis(1); }
    static TwoQubitState eg() { return basis(2); }
    static TwoQubitState ge() { return basis(3); }
};

/// 4x4 density matrix in the same basis order.
struct TwoQubitDensity {
    Matrix4c matrix;

    static TwoQubitDensity from_pure(const TwoQubitState& s) {
        return {s.amplitudes * s.amplitudes.adjoint()};
    }
    double trace_real() const { return matrix.trace().real(); }
};

/// Two-qubit Hamiltonian in the fixed basis order. The constant shift
/// -(alpha/2)(1/d + 1/d') I is dropped; pass constant_shift to restore
/// it for energy bookkeeping.
Matrix4d hamiltonian_matrix(const QubitPairModel& model, double constant_shift = 0.0);

/// Closed-form evolution operator exp(-iHt).
Matrix4c evolution_operator(const QubitPairModel& model, double t);

/// Apply the closed-form evolution to a normalized state.
TwoQubitState evolve(const QubitPairModel& model, const TwoQubitState& state, double t);

/// Reduced density matrix of qubit 1 (partial trace over qubit 2).
Matrix2c reduced_density_qubit1(const TwoQubitState& state);
Matrix2c reduced_density_qubit1(const TwoQubitDensity& rho);

/// Purity deficit gamma = 1 - Tr rho_1^2, in [0, 1/2].
double purity_deficit(const TwoQubitState& state);
double purity_deficit(const TwoQubitDensity& rho);

/// Entangled ground state of the pair, eigenvector of H with
/// eigenvalue -omega'.
TwoQubitState ground_state(const QubitPairModel& model);

/// Population of |g,e> at time t starting from |e,g>: sin^2(uu t).
double rabi_population(const QubitPairModel& model, double t);

} // namespace gravcat

#endif
