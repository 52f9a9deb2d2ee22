#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "gardner/types.hpp"

namespace gardner {

/// One Fourier-mode probe of the linearized scheme. The nonlinearity u + u^2
/// is frozen at eps_local; phi_mode = k h is the mode angle; amp1/amp2 are the
/// harmonic amplitudes of the two coefficient sequences.
struct StabilityInput {
    PhysicsParams params;  // mu3 and lambda enter the mode algebra
    double h = 1.0;
    double dt = 0.1;
    double eps_local = 0.0;
    double phi_mode = 1.0;              // in (0, 2*pi)
    double amp1 = 1.0;
    double amp2 = 1.0;
    double linearization_weight = 1.0;  // weight of the frozen convection term
};

/// Amplification factors of the two collocation equations evaluated
/// separately at the given amplitudes:
///   rho1 = (X1 + iY) / (X2 - iY)   with X1,2 = A1 C -+ (A2 dt mu3 / 2) G,
///   rho2 = (X3 + iZ) / (X4 - iZ)   with X3 = A2 C, X4 = -X3, Z = 2 A1 a3 sin(phi),
/// where C and G are the cosine symbols of the nodal value and second
/// derivative stencils. rho2 has unit modulus identically. rho1 evaluated at a
/// fixed real amplitude pair is NOT a mode of the coupled two-equation update;
/// see verify_stability for the mode-consistent sweep.
std::pair<std::complex<double>, std::complex<double>> amplification_factors(
    const StabilityInput& input);

/// rho1 of the coupled update at the amplitude ratio enforced by the second
/// equation. Algebraically (C^2 + i Theta)/(C^2 - i Theta), hence unit
/// modulus for every mode and parameter choice.
std::complex<double> coupled_mode_rho1(const StabilityInput& input);

struct StabilitySample {
    double phi;
    double eps_local;
    double abs_rho1;
    double abs_rho2;
};

struct StabilityReport {
    double max_abs_rho1 = 0.0;
    double max_abs_rho2 = 0.0;
    double argmax_phi1 = 0.0, argmax_eps1 = 0.0;
    double argmax_phi2 = 0.0, argmax_eps2 = 0.0;
    bool passes = false;  // both maxima within 1 + 1e-12
    std::vector<StabilitySample> samples;
};

/// Sweeps phi over n_modes angles in (0, 2*pi) and eps_local over n_eps values
/// in [eps_lo, eps_hi], evaluating the mode-consistent factors.
StabilityReport verify_stability(const PhysicsParams& params, double h, double dt, double eps_lo,
                                 double eps_hi, int n_modes, int n_eps = 16,
                                 double linearization_weight = 1.0);

}  // namespace gardner
