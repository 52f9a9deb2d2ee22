#pragma once

#include <span>
#include <vector>

#include "gardner/banded.hpp"
#include "gardner/basis.hpp"
#include "gardner/types.hpp"

namespace gardner {

/// Collocated values frozen at time level n that linearize the convection
/// products: u = U(x_m) (from delta) and v = V(x_m) (from phi).
struct FrozenNodal {
    double u;
    double v;
};

/// Per-node frozen values for m = 0..N. The state's ghost entries must be
/// populated.
std::vector<FrozenNodal> compute_kl(const CoefficientState& state, const NodalWeights& weights);

/// Row coefficients of the linearized Crank-Nicolson collocation equation at
/// one node. On the new level the first equation reads
///   nu1 d_{m-1} + nu2 p_{m-1} + nu3 d_m + nu4 p_m + nu5 d_{m+1} + nu2 p_{m+1}
/// and on the old level
///   nu6 d_{m-1} - nu2 p_{m-1} + nu7 d_m - nu4 p_m + nu6 d_{m+1} - nu2 p_{m+1}.
struct NuCoefficients {
    double nu1, nu2, nu3, nu4, nu5, nu6, nu7;
};

NuCoefficients nu_coefficients(const FrozenNodal& kl, const PhysicsParams& params,
                               const NodalWeights& weights, double dt);

/// One time step as the banded pair A x^{n+1} = B x^n + f over the interleaved
/// unknowns (d_0, p_0, ..., d_N, p_N). Interior rows 2m and 2m+1 carry the PDE
/// and the v = u_x constraint collocated at x_m; the four outermost rows close
/// the system with the homogeneous second-derivative end conditions.
struct BandedSystem {
    BandedMatrix lhs;
    BandedMatrix rhs_matrix;
    std::vector<double> rhs_forcing;
};

BandedSystem assemble(const CoefficientState& state, const PhysicsParams& params,
                      const GridSpec& grid, double dt);

/// Solves lhs * x = rhs_matrix * x_n + rhs_forcing by banded LU with partial
/// pivoting and verifies the residual to 1e-10 relative.
std::vector<double> banded_solve(const BandedSystem& system, std::span<const double> x_n);

/// Advances the state by dt and re-imposes the ghost relations.
CoefficientState step(const CoefficientState& state, const PhysicsParams& params,
                      const GridSpec& grid, double dt);

/// Interleaved interior vector (d_0, p_0, ..., d_N, p_N) and its inverse.
std::vector<double> pack_interior(const CoefficientState& state);
void unpack_interior(std::span<const double> x, CoefficientState& state);

}  // namespace gardner
