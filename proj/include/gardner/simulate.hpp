#pragma once

#include <functional>

#include "gardner/problems.hpp"
#include "gardner/types.hpp"

namespace gardner {

/// Fully resolved run configuration, independent of preset bookkeeping.
struct SimulationSetup {
    PhysicsParams params;
    GridSpec grid;
    double dt = 0.1;
    double t_end = 1.0;
    InitialProfile initial;
    std::function<double(double, double)> exact;  // may be empty
};

SimulationSetup setup_from(const ExperimentPreset& p);

/// Number of steps covering t_end; throws std::invalid_argument unless t_end
/// is a positive multiple of dt within 1e-9.
long required_steps(double t_end, double dt);

/// Fits the initial coefficients, advances to t_end and returns the final
/// state. The observer (if any) sees the initial state and every step.
CoefficientState run_simulation(const SimulationSetup& setup,
                                const std::function<void(const CoefficientState&)>& observer = {});

/// L-infinity error against setup.exact at t_end; +infinity when the solver
/// fails or the state leaves the finite range.
double linf_at_end(const SimulationSetup& setup);

}  // namespace gardner
