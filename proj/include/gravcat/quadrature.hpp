#ifndef GRAVCAT_QUADRATURE_HPP
#define GRAVCAT_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace gravcat {

/// Adaptive Gauss-Kronrod (G7,K15) integration of f on [a, b].
/// All nodes are interior, so integrable endpoint structure that has
/// been tamed analytically (counterterms) is handled without special
/// casing. Throws on non-convergence.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, double abs_tol = 1e-14,
                          int max_depth = 48);

/// Gauss-Legendre nodes/weights on [-1, 1], computed by Newton
/// iteration; deterministic.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    explicit GaussLegendreRule(int n);
};

/// Composite Gauss-Legendre over [a, b] split into `panels` equal panels
/// with an n-point rule per panel.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels, const GaussLegendreRule& rule);

/// Tensor-product composite Gauss-Legendre for
/// integral over [a,b]x[a,b] of f(x, y).
double integrate_2d(const std::function<double(double, double)>& f, double a, double b,
                    int panels, int points_per_panel);

} // namespace gravcat

#endif
