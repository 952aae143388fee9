#include "gravcat/qubit_pair.hpp"

#include <cmath>

namespace gravcat {

using std::complex;
static const complex<double> I_unit(0.0, 1.0);

Matrix4d hamiltonian_matrix(const QubitPairModel& model, double constant_shift) {
    model.validate();
    const double w = model.omega, u = model.uu;
    Matrix4d H;
    H << w, -u, 0, 0,
        -u, -w, 0, 0,
         0,  0, 0, -u,
         0,  0, -u, 0;
    H += constant_shift * Matrix4d::Identity();
    return H;
}

Matrix4c evolution_operator(const QubitPairModel& model, double t) {
    model.validate();
    if (!std::isfinite(t)) throw std::domain_error("evolution_operator: t must be finite");
    const double wp = model.omega_prime();
    const double w = model.omega, u = model.uu;
    const double swp = (wp > 0.0) ? std::sin(wp * t) / wp : t;  // sin(wp t)/wp, smooth at wp=0
    Matrix4c U = Matrix4c::Zero();
    U(0, 0) = std::cos(wp * t) - I_unit * w * swp;
    U(1, 1) = std::cos(wp * t) + I_unit * w * swp;
    U(0, 1) = U(1, 0) = I_unit * u * swp;
    U(2, 2) = U(3, 3) = std::cos(u * t);
    U(2, 3) = U(3, 2) = I_unit * std::sin(u * t);
    return U;
}

TwoQubitState evolve(const QubitPairModel& model, const TwoQubitState& state, double t) {
    state.require_normalized();
    TwoQubitState out;
    out.amplitudes = evolution_operator(model, t) * state.amplitudes;
    return out;
}

namespace {

// Map the fixed basis order |e,e>,|g,g>,|e,g>,|g,e> to tensor
// coefficients c(q1,q2) with q = 0 for e, 1 for g.
inline complex<double> tensor_coeff(const Vector4c& a, int q1, int q2) {
    if (q1 == 0 && q2 == 0) return a(0);
    if (q1 == 1 && q2 == 1) return a(1);
    if (q1 == 0 && q2 == 1) return a(2);
    return a(3);
}

} // namespace

Matrix2c reduced_density_qubit1(const TwoQubitState& state) {
    Matrix2c rho1 = Matrix2c::Zero();
    for (int s = 0; s < 2; ++s)
        for (int sp = 0; sp < 2; ++sp)
            for (int r = 0; r < 2; ++r)
                rho1(s, sp) += tensor_coeff(state.amplitudes, s, r) *
                               std::conj(tensor_coeff(state.amplitudes, sp, r));
    return rho1;
}

Matrix2c reduced_density_qubit1(const TwoQubitDensity& rho) {
    // rho element between basis states; index map to (q1,q2)
    auto idx = [](int q1, int q2) {
        if (q1 == 0 && q2 == 0) return 0;
        if (q1 == 1 && q2 == 1) return 1;
        if (q1 == 0 && q2 == 1) return 2;
        return 3;
    };
    Matrix2c rho1 = Matrix2c::Zero();
    for (int s = 0; s < 2; ++s)
        for (int sp = 0; sp < 2; ++sp)
            for (int r = 0; r < 2; ++r)
                rho1(s, sp) += rho.matrix(idx(s, r), idx(sp, r));
    return rho1;
}

double purity_deficit(const TwoQubitState& state) {
    const Matrix2c rho1 = reduced_density_qubit1(state);
    return 1.0 - (rho1 * rho1).trace().real();
}

double purity_deficit(const TwoQubitDensity& rho) {
    const Matrix2c rho1 = reduced_density_qubit1(rho);
    return 1.0 - (rho1 * rho1).trace().real();
}

TwoQubitState ground_state(const QubitPairModel& model) {
    model.validate();
    const double wp = model.omega_prime();
    TwoQubitState s;
    s.amplitudes.setZero();
    if (wp == 0.0) {
        s.amplitudes(1) = 1.0;  // degenerate limit: |g,g>
        return s;
    }
    // Eigenvector of the {|e,e>,|g,g>} block [[w,-u],[-u,-w]] with
    // eigenvalue -omega'. With the off-diagonal -mho (mho > 0) both
    // components are positive: (sqrt(1-w/w'), sqrt(1+w/w'))/sqrt(2).
    s.amplitudes(0) = std::sqrt(0.5 * (1.0 - model.omega / wp));
    s.amplitudes(1) = std::sqrt(0.5 * (1.0 + model.omega / wp));
    return s;
}

double rabi_population(const QubitPairModel& model, double t) {
    model.validate();
    const double s = std::sin(model.uu * t);
    return s * s;
}

} // namespace gravcat
