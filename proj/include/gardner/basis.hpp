#pragma once

#include <span>
#include <vector>

#include "gardner/types.hpp"

namespace gardner {

/// Nodal weights of the extended cubic B-spline basis with mesh size h:
///   U(x_j)   = alpha1 d_{j-1} + alpha2 d_j + alpha1 d_{j+1}
///   U'(x_j)  = beta1 (d_{j-1} - d_{j+1})
///   U''(x_j) = gamma1 d_{j-1} + gamma2 d_j + gamma1 d_{j+1}
/// Identities: 2*alpha1 + alpha2 = 1 and 2*gamma1 + gamma2 = 0 for every lambda.
struct NodalWeights {
    double alpha1;
    double alpha2;
    double beta1;
    double gamma1;
    double gamma2;
};

NodalWeights nodal_weights(double lambda, double h);

/// Value (derivative_order 0), first or second derivative of the extended
/// cubic B-spline E_j at x. Zero outside the support [x_{j-2}, x_{j+2}].
/// j may range over -1..N+1; the ghost splines use extrapolated knots.
double eval_basis(int j, double x, const GridSpec& grid, double lambda, int derivative_order);

/// Spline value Sum_j coeffs_j E_j(x) for coeffs indexed j = -1..N+1
/// (length N+3). x must lie in [a, b].
double reconstruct(std::span<const double> coeffs, double x, const GridSpec& grid, double lambda,
                   int derivative_order = 0);

/// Collocated values at the N+1 grid nodes from a ghosted coefficient vector
/// (length N+3), using the three-term nodal formulas.
std::vector<double> nodal_values(std::span<const double> coeffs, const NodalWeights& w);
std::vector<double> nodal_first_derivatives(std::span<const double> coeffs, const NodalWeights& w);
std::vector<double> nodal_second_derivatives(std::span<const double> coeffs, const NodalWeights& w);

}  // namespace gardner
