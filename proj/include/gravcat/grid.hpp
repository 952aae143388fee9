#ifndef GRAVCAT_GRID_HPP
#define GRAVCAT_GRID_HPP

#include <stdexcept>
#include <vector>

namespace gravcat {

/// Uniform 1D grid on [x_min, x_max] with n points (endpoints included).
struct Grid1D {
    double x_min;
    double x_max;
    int n;

    Grid1D(double a, double b, int npts) : x_min(a), x_max(b), n(npts) {
        if (!(b > a)) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
        if (n < 64) throw std::invalid_argument("Grid1D: n must be >= 64");
    }

    double spacing() const { return (x_max - x_min) / (n - 1); }
    double x(int i) const { return x_min + i * spacing(); }

    std::vector<double> points() const {
        std::vector<double> xs(n);
        for (int i = 0; i < n; ++i) xs[i] = x(i);
        return xs;
    }

    Grid1D refined() const { return Grid1D(x_min, x_max, 2 * n - 1); }
};

} // namespace gravcat

#endif
