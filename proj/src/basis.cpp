#include "gardner/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace gardner {

NodalWeights nodal_weights(double lambda, double h) {
    if (!(h > 0.0)) throw std::domain_error("nodal_weights: mesh size must be positive");
    NodalWeights w;
    w.alpha1 = (4.0 - lambda) / 24.0;
    w.alpha2 = (8.0 + lambda) / 12.0;
    w.beta1 = -1.0 / (2.0 * h);
    w.gamma1 = (2.0 + lambda) / (2.0 * h * h);
    w.gamma2 = -(4.0 + 2.0 * lambda) / (2.0 * h * h);
    return w;
}

namespace {

// Branch polynomials of 24 h^4 E_j in the local variable s, Horner form.
// Branch 1: s = x - x_{j-2} in [0,h),  branch 2: s = x - x_{j-1} in [0,h),
// branch 3: s = x - x_{j+1} in [-h,0), branch 4: s = x - x_{j+2} in [-h,0].
double branch_outer(double s, double h, double lambda, int order) {
    // 4h(1-lambda) s^3 + 3 lambda s^4  (branch 1; branch 4 flips the cubic sign)
    switch (order) {
        case 0: return s * s * s * (4.0 * h * (1.0 - lambda) + 3.0 * lambda * s);
        case 1: return s * s * (12.0 * h * (1.0 - lambda) + 12.0 * lambda * s);
        default: return s * (24.0 * h * (1.0 - lambda) + 36.0 * lambda * s);
    }
}

double branch_outer_right(double s, double h, double lambda, int order) {
    // 4h(lambda-1) s^3 + 3 lambda s^4
    switch (order) {
        case 0: return s * s * s * (4.0 * h * (lambda - 1.0) + 3.0 * lambda * s);
        case 1: return s * s * (12.0 * h * (lambda - 1.0) + 12.0 * lambda * s);
        default: return s * (24.0 * h * (lambda - 1.0) + 36.0 * lambda * s);
    }
}

double branch_inner(double s, double h, double lambda, double sign, int order) {
    // (4-lambda)h^4 + sign*12h^3 s + 6h^2(2+lambda)s^2 - sign*12h s^3 - 3 lambda s^4
    const double h2 = h * h;
    switch (order) {
        case 0:
            return (4.0 - lambda) * h2 * h2 +
                   s * (sign * 12.0 * h2 * h +
                        s * (6.0 * h2 * (2.0 + lambda) + s * (-sign * 12.0 * h - 3.0 * lambda * s)));
        case 1:
            return sign * 12.0 * h2 * h +
                   s * (12.0 * h2 * (2.0 + lambda) + s * (-sign * 36.0 * h - 12.0 * lambda * s));
        default:
            return 12.0 * h2 * (2.0 + lambda) + s * (-sign * 72.0 * h - 36.0 * lambda * s);
    }
}

}  // namespace

double eval_basis(int j, double x, const GridSpec& grid, double lambda, int derivative_order) {
    if (derivative_order < 0 || derivative_order > 2)
        throw std::invalid_argument(
            "eval_basis: only derivative orders 0..2 are supported (the basis is C^2)");
    grid.validate();
    const double h = grid.h();
    const double xm2 = grid.node(j - 2);
    const double xm1 = grid.node(j - 1);
    const double x0 = grid.node(j);
    const double xp1 = grid.node(j + 1);
    const double xp2 = grid.node(j + 2);
    if (x < xm2 || x > xp2) return 0.0;

    double poly;
    if (x < xm1) {
        poly = branch_outer(x - xm2, h, lambda, derivative_order);
    } else if (x < x0) {
        poly = branch_inner(x - xm1, h, lambda, +1.0, derivative_order);
    } else if (x < xp1) {
        poly = branch_inner(x - xp1, h, lambda, -1.0, derivative_order);
    } else {
        poly = branch_outer_right(x - xp2, h, lambda, derivative_order);
    }
    const double h4 = h * h * h * h;
    return poly / (24.0 * h4);
}

double reconstruct(std::span<const double> coeffs, double x, const GridSpec& grid, double lambda,
                   int derivative_order) {
    grid.validate();
    const int n = grid.n_intervals;
    if (coeffs.size() != static_cast<size_t>(n) + 3)
        throw std::invalid_argument("reconstruct: coefficient vector must cover j = -1..N+1");
    if (x < grid.a || x > grid.b)
        throw std::domain_error("reconstruct: x outside the grid interval");

    int cell = static_cast<int>((x - grid.a) / grid.h());
    if (cell < 0) cell = 0;
    if (cell > n - 1) cell = n - 1;

    // Only E_{cell-1}..E_{cell+2} are nonzero on [x_cell, x_{cell+1}].
    double sum = 0.0;
    for (int j = cell - 1; j <= cell + 2; ++j)
        sum += coeffs[static_cast<size_t>(j + 1)] * eval_basis(j, x, grid, lambda, derivative_order);
    return sum;
}

namespace {

std::vector<double> nodal_pattern(std::span<const double> c, double wm, double w0, double wp) {
    const size_t nodes = c.size() - 2;
    std::vector<double> out(nodes);
    for (size_t m = 0; m < nodes; ++m) out[m] = wm * c[m] + w0 * c[m + 1] + wp * c[m + 2];
    return out;
}

}  // namespace

std::vector<double> nodal_values(std::span<const double> coeffs, const NodalWeights& w) {
    return nodal_pattern(coeffs, w.alpha1, w.alpha2, w.alpha1);
}

std::vector<double> nodal_first_derivatives(std::span<const double> coeffs, const NodalWeights& w) {
    return nodal_pattern(coeffs, w.beta1, 0.0, -w.beta1);
}

std::vector<double> nodal_second_derivatives(std::span<const double> coeffs, const NodalWeights& w) {
    return nodal_pattern(coeffs, w.gamma1, w.gamma2, w.gamma1);
}

}  // namespace gardner
