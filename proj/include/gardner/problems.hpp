#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gardner/init.hpp"
#include "gardner/types.hpp"

namespace gardner {

/// Solitary pulse solution for mu = (4, -3, 1):
///   u(x,t) = 2 / (12 + 3 sqrt(14) cosh(-x/3 + 5/3 + t/27)),
/// peak 2/(12+3 sqrt(14)) travelling right at speed 1/9.
double exact_pulse(double x, double t);
double exact_pulse_dx(double x, double t);

/// Kink front for mu = (1, -5, 1):
///   u(x,t) = 1/10 - 1/10 tanh(sqrt(30)/60 (x - t/30)),
/// connecting 0.2 on the left to 0 on the right at speed 1/30.
double exact_kink(double x, double t);
double exact_kink_dx(double x, double t);

/// Initial pulse of the wave-generation experiment, height 0.4305 at x = 5.
double generation_initial(double x);
double generation_initial_dx(double x);

/// A ready-to-run experiment: constants, grid, step sizes, initial data and
/// (when available) the closed-form solution.
struct ExperimentPreset {
    std::string name;
    PhysicsParams params;
    GridSpec grid;
    double dt = 0.1;
    double t_end = 1.0;
    std::function<double(double, double)> exact;  // empty when no closed form
    InitialProfile initial;
    std::vector<double> default_snapshots;
};

/// Presets: "pulse" ([-20,30], N=100, dt=0.1, t=5), "kink" ([-80,80], N=400,
/// dt=0.1, t=12), "generation" ([-40,60], N=400, dt=0.01, t=15, no exact
/// solution, epsilon settable). Unknown names throw std::invalid_argument.
ExperimentPreset preset(std::string_view name);

}  // namespace gardner
