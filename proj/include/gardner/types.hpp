#pragma once

#include <stdexcept>
#include <vector>

namespace gardner {

/// Uniform grid a = x_0 < x_1 < ... < x_N = b with mesh size h = (b-a)/N.
/// node(j) is also valid for the ghost indices used by the spline basis.
struct GridSpec {
    double a = 0.0;
    double b = 1.0;
    int n_intervals = 4;

    double h() const { return (b - a) / n_intervals; }
    double node(int j) const { return a + j * h(); }

    void validate() const {
        if (!(a < b)) throw std::domain_error("GridSpec: requires a < b");
        if (n_intervals < 4)
            throw std::domain_error("GridSpec: at least 4 intervals needed by the stencil");
    }
};

/// Equation constants of u_t + mu1 u u_x + mu2 u^2 u_x + mu3 u_xxx + epsilon = 0,
/// plus the extension parameter of the spline basis.
struct PhysicsParams {
    double mu1 = 0.0;
    double mu2 = 0.0;
    double mu3 = 1.0;
    double epsilon = 0.0;  // constant forcing, 0 for the unperturbed equation
    double lambda = 0.0;   // basis extension parameter, classical cubic splines at 0
};

/// Time-dependent spline coefficients delta_j (for U) and phi_j (for V = U_x),
/// j = -1..N+1. The two ghost pairs mirror their interior neighbours once the
/// homogeneous Neumann conditions have been imposed.
class CoefficientState {
public:
    CoefficientState() = default;
    explicit CoefficientState(int n_intervals, double t = 0.0)
        : time(t), n_(n_intervals),
          delta_(static_cast<size_t>(n_intervals) + 3, 0.0),
          phi_(static_cast<size_t>(n_intervals) + 3, 0.0) {}

    int n_intervals() const { return n_; }

    double& delta(int j) { return delta_[static_cast<size_t>(j + 1)]; }
    double delta(int j) const { return delta_[static_cast<size_t>(j + 1)]; }
    double& phi(int j) { return phi_[static_cast<size_t>(j + 1)]; }
    double phi(int j) const { return phi_[static_cast<size_t>(j + 1)]; }

    /// Contiguous storage ordered j = -1..N+1.
    std::vector<double>& delta_coeffs() { return delta_; }
    const std::vector<double>& delta_coeffs() const { return delta_; }
    std::vector<double>& phi_coeffs() { return phi_; }
    const std::vector<double>& phi_coeffs() const { return phi_; }

    /// Restores delta_{-1}=delta_1, delta_{N+1}=delta_{N-1} and likewise for phi.
    void impose_boundary_relations() {
        delta(-1) = delta(1);
        delta(n_ + 1) = delta(n_ - 1);
        phi(-1) = phi(1);
        phi(n_ + 1) = phi(n_ - 1);
    }

    bool boundary_relations_hold() const {
        return delta(-1) == delta(1) && delta(n_ + 1) == delta(n_ - 1) &&
               phi(-1) == phi(1) && phi(n_ + 1) == phi(n_ - 1);
    }

    double time = 0.0;

private:
    int n_ = 0;
    std::vector<double> delta_;
    std::vector<double> phi_;
};

}  // namespace gardner
