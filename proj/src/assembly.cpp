#include "gardner/assembly.hpp"

#include <cmath>
#include <stdexcept>

namespace gardner {

std::vector<FrozenNodal> compute_kl(const CoefficientState& state, const NodalWeights& weights) {
    const auto u = nodal_values(state.delta_coeffs(), weights);
    const auto v = nodal_values(state.phi_coeffs(), weights);
    std::vector<FrozenNodal> out(u.size());
    for (size_t m = 0; m < u.size(); ++m) out[m] = {u[m], v[m]};
    return out;
}

NuCoefficients nu_coefficients(const FrozenNodal& kl, const PhysicsParams& params,
                               const NodalWeights& w, double dt) {
    if (!(dt > 0.0)) throw std::domain_error("nu_coefficients: time step must be positive");
    const double k = kl.u;
    const double l = kl.v;
    const double implicit_mass = 2.0 / dt + params.mu1 * l + 2.0 * params.mu2 * k * l;
    const double convection = (params.mu1 + params.mu2 * k) * k;  // mu1 K + mu2 K^2
    const double explicit_mass = 2.0 / dt + params.mu2 * k * l;
    NuCoefficients nu;
    nu.nu1 = implicit_mass * w.alpha1 + convection * w.beta1;
    nu.nu2 = params.mu3 * w.gamma1;
    nu.nu3 = implicit_mass * w.alpha2;
    nu.nu4 = params.mu3 * w.gamma2;
    nu.nu5 = implicit_mass * w.alpha1 - convection * w.beta1;
    nu.nu6 = explicit_mass * w.alpha1;
    nu.nu7 = explicit_mass * w.alpha2;
    return nu;
}

BandedSystem assemble(const CoefficientState& state, const PhysicsParams& params,
                      const GridSpec& grid, double dt) {
    grid.validate();
    const int nn = grid.n_intervals;
    if (state.n_intervals() != nn)
        throw std::logic_error("assemble: state and grid dimensions disagree");
    const int dim = 2 * (nn + 1);
    const NodalWeights w = nodal_weights(params.lambda, grid.h());
    const auto kl = compute_kl(state, w);

    BandedSystem sys{BandedMatrix(dim, 3, 3), BandedMatrix(dim, 3, 3),
                     std::vector<double>(static_cast<size_t>(dim), 0.0)};

    const auto dcol = [](int m) { return 2 * m; };
    const auto pcol = [](int m) { return 2 * m + 1; };

    for (int m = 1; m < nn; ++m) {
        const NuCoefficients nu = nu_coefficients(kl[static_cast<size_t>(m)], params, w, dt);
        const int r1 = 2 * m;
        sys.lhs.at(r1, dcol(m - 1)) = nu.nu1;
        sys.lhs.at(r1, pcol(m - 1)) = nu.nu2;
        sys.lhs.at(r1, dcol(m)) = nu.nu3;
        sys.lhs.at(r1, pcol(m)) = nu.nu4;
        sys.lhs.at(r1, dcol(m + 1)) = nu.nu5;
        sys.lhs.at(r1, pcol(m + 1)) = nu.nu2;
        sys.rhs_matrix.at(r1, dcol(m - 1)) = nu.nu6;
        sys.rhs_matrix.at(r1, pcol(m - 1)) = -nu.nu2;
        sys.rhs_matrix.at(r1, dcol(m)) = nu.nu7;
        sys.rhs_matrix.at(r1, pcol(m)) = -nu.nu4;
        sys.rhs_matrix.at(r1, dcol(m + 1)) = nu.nu6;
        sys.rhs_matrix.at(r1, pcol(m + 1)) = -nu.nu2;
        sys.rhs_forcing[static_cast<size_t>(r1)] = -2.0 * params.epsilon;

        const int r2 = 2 * m + 1;
        sys.lhs.at(r2, dcol(m - 1)) = -w.beta1;
        sys.lhs.at(r2, pcol(m - 1)) = w.alpha1;
        sys.lhs.at(r2, pcol(m)) = w.alpha2;
        sys.lhs.at(r2, dcol(m + 1)) = w.beta1;
        sys.lhs.at(r2, pcol(m + 1)) = w.alpha1;
        sys.rhs_matrix.at(r2, dcol(m - 1)) = w.beta1;
        sys.rhs_matrix.at(r2, pcol(m - 1)) = -w.alpha1;
        sys.rhs_matrix.at(r2, pcol(m)) = -w.alpha2;
        sys.rhs_matrix.at(r2, dcol(m + 1)) = -w.beta1;
        sys.rhs_matrix.at(r2, pcol(m + 1)) = -w.alpha1;
    }

    // End closures: u_xx = v_xx = 0 at both boundary nodes, written with the
    // ghost coefficients already eliminated through d_{-1} = d_1 (u_x = 0),
    // which turns gamma1 (d_{-1} - 2 d_0 + d_1) = 0 into 2 gamma1 (d_1 - d_0) = 0.
    const double g2 = 2.0 * w.gamma1;
    sys.lhs.at(0, dcol(0)) = -g2;
    sys.lhs.at(0, dcol(1)) = g2;
    sys.lhs.at(1, pcol(0)) = -g2;
    sys.lhs.at(1, pcol(1)) = g2;
    sys.lhs.at(2 * nn, dcol(nn - 1)) = g2;
    sys.lhs.at(2 * nn, dcol(nn)) = -g2;
    sys.lhs.at(2 * nn + 1, pcol(nn - 1)) = g2;
    sys.lhs.at(2 * nn + 1, pcol(nn)) = -g2;

    return sys;
}

std::vector<double> banded_solve(const BandedSystem& system, std::span<const double> x_n) {
    std::vector<double> rhs = system.rhs_matrix.multiply(x_n);
    for (size_t i = 0; i < rhs.size(); ++i) rhs[i] += system.rhs_forcing[i];

    const BandedLU lu(system.lhs);
    std::vector<double> x = lu.solve(rhs);

    double rhs_norm = 0.0;
    for (double v : rhs) rhs_norm = std::max(rhs_norm, std::abs(v));
    const std::vector<double> back = system.lhs.multiply(x);
    double res = 0.0;
    int worst = 0;
    for (size_t i = 0; i < back.size(); ++i) {
        const double r = std::abs(back[i] - rhs[i]);
        if (r > res) {
            res = r;
            worst = static_cast<int>(i);
        }
    }
    if (!(res <= 1e-10 * std::max(rhs_norm, 1e-300)))
        throw SolverError("banded_solve: residual above tolerance at row " +
                              std::to_string(worst),
                          worst);
    return x;
}

std::vector<double> pack_interior(const CoefficientState& state) {
    const int nn = state.n_intervals();
    std::vector<double> x(static_cast<size_t>(2 * (nn + 1)));
    for (int m = 0; m <= nn; ++m) {
        x[static_cast<size_t>(2 * m)] = state.delta(m);
        x[static_cast<size_t>(2 * m + 1)] = state.phi(m);
    }
    return x;
}

void unpack_interior(std::span<const double> x, CoefficientState& state) {
    const int nn = state.n_intervals();
    if (x.size() != static_cast<size_t>(2 * (nn + 1)))
        throw std::invalid_argument("unpack_interior: size mismatch");
    for (int m = 0; m <= nn; ++m) {
        state.delta(m) = x[static_cast<size_t>(2 * m)];
        state.phi(m) = x[static_cast<size_t>(2 * m + 1)];
    }
    state.impose_boundary_relations();
}

CoefficientState step(const CoefficientState& state, const PhysicsParams& params,
                      const GridSpec& grid, double dt) {
    const BandedSystem sys = assemble(state, params, grid, dt);
    const std::vector<double> x_n = pack_interior(state);
    const std::vector<double> x_next = banded_solve(sys, x_n);
    for (size_t i = 0; i < x_next.size(); ++i)
        if (!std::isfinite(x_next[i]))
            throw SolverError("step: non-finite value in solution", static_cast<int>(i));
    CoefficientState next = state;
    unpack_interior(x_next, next);
    next.time = state.time + dt;
    return next;
}

}  // namespace gardner
