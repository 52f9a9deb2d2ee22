#include "gardner/init.hpp"

#include "gardner/banded.hpp"
#include "gardner/basis.hpp"

namespace gardner {

CoefficientState fit_initial(const InitialProfile& profile, const GridSpec& grid, double lambda) {
    grid.validate();
    if (!profile.f || !profile.fx)
        throw std::invalid_argument("fit_initial: profile needs both f and f_x");
    const int nn = grid.n_intervals;
    const NodalWeights w = nodal_weights(lambda, grid.h());

    // Interpolation rows a1, a2, a1 with the ghost columns folded into the
    // first and last interior ones.
    BandedMatrix m(nn + 1, 1, 1);
    m.at(0, 0) = w.alpha2;
    m.at(0, 1) = 2.0 * w.alpha1;
    for (int j = 1; j < nn; ++j) {
        m.at(j, j - 1) = w.alpha1;
        m.at(j, j) = w.alpha2;
        m.at(j, j + 1) = w.alpha1;
    }
    m.at(nn, nn - 1) = 2.0 * w.alpha1;
    m.at(nn, nn) = w.alpha2;
    const BandedLU lu(m);

    std::vector<double> fu(static_cast<size_t>(nn) + 1), fv(static_cast<size_t>(nn) + 1);
    for (int j = 0; j <= nn; ++j) {
        const double x = grid.node(j);
        fu[static_cast<size_t>(j)] = profile.f(x);
        fv[static_cast<size_t>(j)] = profile.fx(x);
    }
    lu.solve_in_place(fu);
    lu.solve_in_place(fv);

    CoefficientState state(nn, 0.0);
    for (int j = 0; j <= nn; ++j) {
        state.delta(j) = fu[static_cast<size_t>(j)];
        state.phi(j) = fv[static_cast<size_t>(j)];
    }
    state.impose_boundary_relations();
    return state;
}

}  // namespace gardner
