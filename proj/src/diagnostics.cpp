#include "gardner/diagnostics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gardner/basis.hpp"

namespace gardner {

double linf_error(const CoefficientState& state,
                  const std::function<double(double, double)>& exact, const GridSpec& grid,
                  double lambda) {
    if (!exact) throw std::invalid_argument("linf_error: exact solution required");
    const NodalWeights w = nodal_weights(lambda, grid.h());
    const auto u = nodal_values(state.delta_coeffs(), w);
    double worst = 0.0;
    for (int j = 0; j <= grid.n_intervals; ++j) {
        const double e = std::abs(exact(grid.node(j), state.time) - u[static_cast<size_t>(j)]);
        if (e > worst) worst = e;
    }
    return worst;
}

namespace {

double hamiltonian_integrand(double u, double ux, const PhysicsParams& p) {
    const double u2 = u * u;
    return p.mu1 * u2 * u / 3.0 + p.mu2 * u2 * u2 / 6.0 - p.mu3 * ux * ux;
}

}  // namespace

ConservedQuantities conserved_quantities(const CoefficientState& state,
                                         const PhysicsParams& params, const GridSpec& grid,
                                         QuadratureRule rule) {
    const double h = grid.h();
    const NodalWeights w = nodal_weights(params.lambda, h);
    const auto u = nodal_values(state.delta_coeffs(), w);
    const auto ux = nodal_first_derivatives(state.delta_coeffs(), w);
    const int nn = grid.n_intervals;

    if (rule == QuadratureRule::rectangle) {
        double m = 0.0, e = 0.0, ham = 0.0;
        for (int j = 0; j < nn; ++j) {
            const double uj = u[static_cast<size_t>(j)];
            const double uxj = ux[static_cast<size_t>(j)];
            m += uj;
            e += uj * uj;
            ham += hamiltonian_integrand(uj, uxj, params);
        }
        return {h * m, h * e, h * ham};
    }

    // Composite Simpson on each interval using the spline at the midpoint.
    double m = 0.0, e = 0.0, ham = 0.0;
    for (int j = 0; j < nn; ++j) {
        const double xm = grid.a + (j + 0.5) * h;
        const double um = reconstruct(state.delta_coeffs(), xm, grid, params.lambda, 0);
        const double uxm = reconstruct(state.delta_coeffs(), xm, grid, params.lambda, 1);
        const double ul = u[static_cast<size_t>(j)];
        const double ur = u[static_cast<size_t>(j + 1)];
        const double uxl = ux[static_cast<size_t>(j)];
        const double uxr = ux[static_cast<size_t>(j + 1)];
        m += ul + 4.0 * um + ur;
        e += ul * ul + 4.0 * um * um + ur * ur;
        ham += hamiltonian_integrand(ul, uxl, params) + 4.0 * hamiltonian_integrand(um, uxm, params) +
               hamiltonian_integrand(ur, uxr, params);
    }
    const double scale = h / 6.0;
    return {scale * m, scale * e, scale * ham};
}

RelativeChanges relative_changes(const ConservedQuantities& current,
                                 const ConservedQuantities& initial) {
    if (initial.m == 0.0) throw std::domain_error("relative_changes: initial M is zero");
    if (initial.e == 0.0) throw std::domain_error("relative_changes: initial E is zero");
    if (initial.h == 0.0) throw std::domain_error("relative_changes: initial H is zero");
    return {std::abs((current.m - initial.m) / initial.m),
            std::abs((current.e - initial.e) / initial.e),
            std::abs((current.h - initial.h) / initial.h)};
}

}  // namespace gardner
