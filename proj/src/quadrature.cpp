#include "gravcat/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace gravcat {

namespace {

// Kronrod-15 nodes on [0,1] of |x|, with embedded Gauss-7.
const double kron_x[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
const double kron_w[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
const double gauss_w[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

struct GK {
    double kronrod;
    double err;
};

GK gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fv[15];
    fv[7] = f(c);
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kron_x[7 - i]);
        fv[8 + i] = f(c + h * kron_x[i + 1]);
    }
    double resk = kron_w[0] * fv[7];
    double resg = gauss_w[0] * fv[7];
    for (int i = 1; i < 8; ++i)
        resk += kron_w[i] * (fv[7 - i] + fv[7 + i]);
    for (int i = 1; i < 4; ++i)
        resg += gauss_w[i] * (fv[7 - 2 * i] + fv[7 + 2 * i]);
    resk *= h;
    resg *= h;
    return {resk, std::abs(resk - resg)};
}

double adapt(const std::function<double(double)>& f, double a, double b, double rel_tol,
             double abs_tol, int depth, double whole_scale) {
    const GK r = gk15(f, a, b);
    if (r.err <= abs_tol || r.err <= rel_tol * std::abs(whole_scale)) return r.kronrod;
    if (depth <= 0)
        throw std::runtime_error("integrate_adaptive: quadrature did not converge");
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, rel_tol, abs_tol * 0.5, depth - 1, whole_scale) +
           adapt(f, c, b, rel_tol, abs_tol * 0.5, depth - 1, whole_scale);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    const GK first = gk15(f, a, b);
    const double scale = std::max(std::abs(first.kronrod), abs_tol);
    if (first.err <= abs_tol || first.err <= rel_tol * scale) return first.kronrod;
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, rel_tol, abs_tol, max_depth, scale) +
           adapt(f, c, b, rel_tol, abs_tol, max_depth, scale);
}

GaussLegendreRule::GaussLegendreRule(int n) {
    if (n < 2) throw std::invalid_argument("GaussLegendreRule: n must be >= 2");
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev initial guess, Newton refinement on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels, const GaussLegendreRule& rule) {
    double sum = 0.0;
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double c = a + (p + 0.5) * h;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            sum += rule.weights[i] * f(c + 0.5 * h * rule.nodes[i]);
    }
    return sum * 0.5 * h;
}

double integrate_2d(const std::function<double(double, double)>& f, double a, double b,
                    int panels, int points_per_panel) {
    const GaussLegendreRule rule(points_per_panel);
    const double h = (b - a) / panels;
    const int n = points_per_panel;
    std::vector<double> xs(panels * n), ws(panels * n);
    for (int p = 0; p < panels; ++p) {
        const double c = a + (p + 0.5) * h;
        for (int i = 0; i < n; ++i) {
            xs[p * n + i] = c + 0.5 * h * rule.nodes[i];
            ws[p * n + i] = 0.5 * h * rule.weights[i];
        }
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < xs.size(); ++j) row += ws[j] * f(xs[i], xs[j]);
        sum += ws[i] * row;
    }
    return sum;
}

} // namespace gravcat
