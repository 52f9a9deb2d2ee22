#include "gardner/simulate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gardner/assembly.hpp"
#include "gardner/diagnostics.hpp"
#include "gardner/init.hpp"

namespace gardner {

SimulationSetup setup_from(const ExperimentPreset& p) {
    return {p.params, p.grid, p.dt, p.t_end, p.initial, p.exact};
}

long required_steps(double t_end, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("required_steps: dt must be positive");
    if (!(t_end > 0.0)) throw std::invalid_argument("required_steps: t_end must be positive");
    const long n = std::lround(t_end / dt);
    if (n < 1 || std::abs(n * dt - t_end) > 1e-9)
        throw std::invalid_argument("required_steps: t_end is not a multiple of dt");
    return n;
}

CoefficientState run_simulation(const SimulationSetup& setup,
                                const std::function<void(const CoefficientState&)>& observer) {
    const long steps = required_steps(setup.t_end, setup.dt);
    CoefficientState state = fit_initial(setup.initial, setup.grid, setup.params.lambda);
    if (observer) observer(state);
    for (long n = 0; n < steps; ++n) {
        state = step(state, setup.params, setup.grid, setup.dt);
        if (observer) observer(state);
    }
    return state;
}

double linf_at_end(const SimulationSetup& setup) {
    if (!setup.exact) throw std::invalid_argument("linf_at_end: setup has no exact solution");
    try {
        const CoefficientState final_state = run_simulation(setup);
        const double e = linf_error(final_state, setup.exact, setup.grid, setup.params.lambda);
        return std::isfinite(e) ? e : std::numeric_limits<double>::infinity();
    } catch (const SolverError&) {
        return std::numeric_limits<double>::infinity();
    }
}

}  // namespace gardner
