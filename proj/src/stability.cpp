#include "gardner/stability.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gardner/basis.hpp"

namespace gardner {

namespace {

struct ModeSymbols {
    double c;   // 2 a1 cos(phi) + a2, nodal value stencil
    double g;   // 2 a4 cos(phi) + a5, second-derivative stencil
    double a3;  // 1/(2h), first-derivative stencil magnitude
    double s;   // sin(phi)
};

ModeSymbols symbols(const StabilityInput& in) {
    if (!(in.phi_mode > 0.0) || !(in.phi_mode < 2.0 * std::numbers::pi))
        throw std::domain_error("stability: phi_mode must lie in (0, 2*pi)");
    const NodalWeights w = nodal_weights(in.params.lambda, in.h);
    const double cosphi = std::cos(in.phi_mode);
    return {2.0 * w.alpha1 * cosphi + w.alpha2, 2.0 * w.gamma1 * cosphi + w.gamma2,
            1.0 / (2.0 * in.h), std::sin(in.phi_mode)};
}

}  // namespace

std::pair<std::complex<double>, std::complex<double>> amplification_factors(
    const StabilityInput& in) {
    if (in.amp1 == 0.0 && in.amp2 == 0.0)
        throw std::domain_error("stability: amplitudes must not both vanish");
    const ModeSymbols sym = symbols(in);
    const double dispersive = 0.5 * in.amp2 * in.dt * in.params.mu3 * sym.g;
    const double x1 = in.amp1 * sym.c - dispersive;
    const double x2 = in.amp1 * sym.c + dispersive;
    const double y = in.linearization_weight * in.dt * in.eps_local * in.amp1 * sym.a3 * sym.s;
    const std::complex<double> rho1 =
        std::complex<double>(x1, y) / std::complex<double>(x2, -y);

    const double x3 = in.amp2 * sym.c;
    const double z = 2.0 * in.amp1 * sym.a3 * sym.s;
    const std::complex<double> rho2 =
        std::complex<double>(x3, z) / std::complex<double>(-x3, -z);
    return {rho1, rho2};
}

std::complex<double> coupled_mode_rho1(const StabilityInput& in) {
    const ModeSymbols sym = symbols(in);
    const double w = in.linearization_weight * in.dt * in.eps_local * sym.a3 * sym.s;
    const double theta = sym.c * w + in.dt * in.params.mu3 * sym.g * sym.a3 * sym.s;
    const double c2 = sym.c * sym.c;
    return std::complex<double>(c2, theta) / std::complex<double>(c2, -theta);
}

StabilityReport verify_stability(const PhysicsParams& params, double h, double dt, double eps_lo,
                                 double eps_hi, int n_modes, int n_eps,
                                 double linearization_weight) {
    if (n_modes < 8) throw std::invalid_argument("verify_stability: need at least 8 modes");
    if (n_eps < 1) throw std::invalid_argument("verify_stability: need at least one eps value");
    if (!(eps_lo <= eps_hi)) throw std::invalid_argument("verify_stability: bad eps range");

    StabilityReport report;
    report.samples.reserve(static_cast<size_t>(n_modes) * static_cast<size_t>(n_eps));
    const double two_pi = 2.0 * std::numbers::pi;
    for (int ie = 0; ie < n_eps; ++ie) {
        const double eps =
            n_eps == 1 ? eps_lo : eps_lo + (eps_hi - eps_lo) * ie / static_cast<double>(n_eps - 1);
        for (int im = 1; im <= n_modes; ++im) {
            const double phi = two_pi * im / static_cast<double>(n_modes + 1);
            StabilityInput in{params, h, dt, eps, phi, 1.0, 1.0, linearization_weight};
            const double r1 = std::abs(coupled_mode_rho1(in));
            const double r2 = std::abs(amplification_factors(in).second);
            report.samples.push_back({phi, eps, r1, r2});
            if (r1 > report.max_abs_rho1) {
                report.max_abs_rho1 = r1;
                report.argmax_phi1 = phi;
                report.argmax_eps1 = eps;
            }
            if (r2 > report.max_abs_rho2) {
                report.max_abs_rho2 = r2;
                report.argmax_phi2 = phi;
                report.argmax_eps2 = eps;
            }
        }
    }
    report.passes =
        report.max_abs_rho1 <= 1.0 + 1e-12 && std::abs(report.max_abs_rho2 - 1.0) <= 1e-12;
    return report;
}

}  // namespace gardner
