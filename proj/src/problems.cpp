#include "gardner/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace gardner {

namespace {
const double kSqrt14 = std::sqrt(14.0);
const double kKinkSlope = std::sqrt(30.0) / 60.0;
}  // namespace

double exact_pulse(double x, double t) {
    const double theta = -x / 3.0 + 5.0 / 3.0 + t / 27.0;
    return 2.0 / (12.0 + 3.0 * kSqrt14 * std::cosh(theta));
}

double exact_pulse_dx(double x, double t) {
    const double theta = -x / 3.0 + 5.0 / 3.0 + t / 27.0;
    const double den = 12.0 + 3.0 * kSqrt14 * std::cosh(theta);
    return 2.0 * kSqrt14 * std::sinh(theta) / (den * den);
}

double exact_kink(double x, double t) {
    return 0.1 - 0.1 * std::tanh(kKinkSlope * (x - t / 30.0));
}

double exact_kink_dx(double x, double t) {
    const double c = std::cosh(kKinkSlope * (x - t / 30.0));
    return -0.1 * kKinkSlope / (c * c);
}

// The generation experiment starts from the pulse shape scaled to height
// (10/3)/(4+sqrt(14)) = 0.4305..., the amplitude consistent with the reference
// conservation values M0 = 5.2255, E0 = 1.5033, H0 = 1.5994 on [-40,60].
double generation_initial(double x) {
    const double theta = x / 3.0 - 5.0 / 3.0;
    return (10.0 / 3.0) / (4.0 + kSqrt14 * std::cosh(theta));
}

double generation_initial_dx(double x) {
    const double theta = x / 3.0 - 5.0 / 3.0;
    const double den = 4.0 + kSqrt14 * std::cosh(theta);
    return -(10.0 / 9.0) * kSqrt14 * std::sinh(theta) / (den * den);
}

ExperimentPreset preset(std::string_view name) {
    ExperimentPreset p;
    if (name == "pulse") {
        p.name = "pulse";
        p.params = {4.0, -3.0, 1.0, 0.0, 0.0};
        p.grid = {-20.0, 30.0, 100};
        p.dt = 0.1;
        p.t_end = 5.0;
        p.exact = exact_pulse;
        p.initial = {[](double x) { return exact_pulse(x, 0.0); },
                     [](double x) { return exact_pulse_dx(x, 0.0); }};
        p.default_snapshots = {0.0, 2.5, 5.0};
    } else if (name == "kink") {
        p.name = "kink";
        p.params = {1.0, -5.0, 1.0, 0.0, 0.0};
        p.grid = {-80.0, 80.0, 400};
        p.dt = 0.1;
        p.t_end = 12.0;
        p.exact = exact_kink;
        p.initial = {[](double x) { return exact_kink(x, 0.0); },
                     [](double x) { return exact_kink_dx(x, 0.0); }};
        p.default_snapshots = {0.0, 4.0, 12.0};
    } else if (name == "generation") {
        p.name = "generation";
        p.params = {10.0, -3.0, 1.0, 0.0, 0.0};
        p.grid = {-40.0, 60.0, 400};
        p.dt = 0.01;
        p.t_end = 15.0;
        p.initial = {generation_initial, generation_initial_dx};
        p.default_snapshots = {0.0, 5.0, 10.0, 15.0};
    } else {
        throw std::invalid_argument("preset: unknown name '" + std::string(name) +
                                    "' (expected pulse, kink or generation)");
    }
    return p;
}

}  // namespace gardner
