#pragma once

#include <functional>
#include <optional>

#include "gardner/types.hpp"

namespace gardner {

struct ConservedQuantities {
    double m;  // integral of u
    double e;  // integral of u^2
    double h;  // integral of mu1 u^3/3 + mu2 u^4/6 - mu3 u_x^2
};

/// rectangle: left-endpoint rule h * sum_{j=0..N-1} g(x_j), the rule behind
/// the reference conservation tables. simpson: composite Simpson on the
/// spline reconstruction sampled at nodes and interval midpoints.
enum class QuadratureRule { rectangle, simpson };

/// Discrete maximum norm max_j |exact(x_j, t) - U(x_j, t)| over the grid nodes.
double linf_error(const CoefficientState& state,
                  const std::function<double(double, double)>& exact, const GridSpec& grid,
                  double lambda);

ConservedQuantities conserved_quantities(const CoefficientState& state,
                                         const PhysicsParams& params, const GridSpec& grid,
                                         QuadratureRule rule = QuadratureRule::rectangle);

struct RelativeChanges {
    double c_m, c_e, c_h;
};

/// Absolute relative deviations from the initial quantities. A zero initial
/// quantity raises std::domain_error naming the offending integral.
RelativeChanges relative_changes(const ConservedQuantities& current,
                                 const ConservedQuantities& initial);

struct DiagnosticsRecord {
    double time = 0.0;
    std::optional<double> linf;  // present only with an exact solution
    double m = 0.0, e = 0.0, h_quantity = 0.0;
    double c_m = 0.0, c_e = 0.0, c_h = 0.0;
};

}  // namespace gardner
