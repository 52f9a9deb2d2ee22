#pragma once

#include <functional>

#include "gardner/types.hpp"

namespace gardner {

/// Initial data u(x,0) = f(x) and v(x,0) = f_x(x).
struct InitialProfile {
    std::function<double(double)> f;
    std::function<double(double)> fx;
};

/// Fits the time-zero spline coefficients by nodal interpolation at all grid
/// nodes closed with the homogeneous Neumann relations d_{-1} = d_1 and
/// d_{N-1} = d_{N+1} (same for phi). Two tridiagonal solves share one
/// factorization.
CoefficientState fit_initial(const InitialProfile& profile, const GridSpec& grid, double lambda);

}  // namespace gardner
