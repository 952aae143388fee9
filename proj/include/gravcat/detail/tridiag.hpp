#ifndef GRAVCAT_DETAIL_TRIDIAG_HPP
#define GRAVCAT_DETAIL_TRIDIAG_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

namespace gravcat::detail {

/// Number of eigenvalues of the symmetric tridiagonal (d, e) strictly
/// below lambda (Sturm sequence count).
inline int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double lambda) {
    const int n = static_cast<int>(d.size());
    int count = 0;
    double q = d[0] - lambda;
    if (q < 0.0) ++count;
    for (int i = 1; i < n; ++i) {
        if (q == 0.0) q = 1e-300;
        q = d[i] - lambda - e[i - 1] * e[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

/// Lowest k eigenvalues by bisection.
inline std::vector<double> lowest_eigenvalues(const std::vector<double>& d,
                                              const std::vector<double>& e, int k) {
    const int n = static_cast<int>(d.size());
    double lo = d[0], hi = d[0];
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i < n - 1 ? std::abs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    std::vector<double> out(k);
    for (int j = 0; j < k; ++j) {
        double a = lo, b = hi;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(d, e, mid) <= j)
                a = mid;
            else
                b = mid;
        }
        out[j] = 0.5 * (a + b);
    }
    return out;
}

/// Solve (T - lambda I) x = b with partial pivoting (fill-in to the
/// second superdiagonal).
inline Eigen::VectorXd shifted_tridiag_solve(const std::vector<double>& d,
                                             const std::vector<double>& e, double lambda,
                                             Eigen::VectorXd b) {
    const int n = static_cast<int>(d.size());
    std::vector<double> a0(n), a1(n - 1), a2(std::max(0, n - 2), 0.0), sub(n - 1);
    for (int i = 0; i < n; ++i) a0[i] = d[i] - lambda;
    for (int i = 0; i < n - 1; ++i) a1[i] = e[i], sub[i] = e[i];
    for (int i = 0; i < n - 1; ++i) {
        if (std::abs(sub[i]) > std::abs(a0[i])) {
            std::swap(a0[i], sub[i]);
            std::swap(a1[i], a0[i + 1]);
            if (i < n - 2) std::swap(a2[i], a1[i + 1]);
            std::swap(b(i), b(i + 1));
        }
        if (a0[i] == 0.0) a0[i] = 1e-300;
        const double l = sub[i] / a0[i];
        a0[i + 1] -= l * a1[i];
        if (i < n - 2) a1[i + 1] -= l * a2[i];
        b(i + 1) -= l * b(i);
    }
    Eigen::VectorXd x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = b(i);
        if (i < n - 1) s -= a1[i] * x(i + 1);
        if (i < n - 2) s -= a2[i] * x(i + 2);
        if (a0[i] == 0.0) a0[i] = 1e-300;
        x(i) = s / a0[i];
    }
    return x;
}

/// Eigenvector for a converged eigenvalue, by inverse iteration with a
/// deterministic start vector.
inline Eigen::VectorXd inverse_iteration(const std::vector<double>& d,
                                         const std::vector<double>& e, double lambda) {
    const int n = static_cast<int>(d.size());
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = std::sin(0.37 * (i + 1)) + 0.5;
    v.normalize();
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(d[i]));
    const double shift = lambda + 1e-12 * scale;
    for (int it = 0; it < 5; ++it) {
        v = shifted_tridiag_solve(d, e, shift, v);
        v.normalize();
    }
    return v;
}

} // namespace gravcat::detail

#endif
