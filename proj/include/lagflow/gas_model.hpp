#pragma once

#include <stdexcept>

namespace lagflow {

/// Polytropic gas in one-dimensional flow geometry.
///
/// n = 0: plane flow, n = 1: radial (cylindrical) flow, n = 2: spherical
/// flow; the space dimension is n + 1.  gamma is the adiabatic exponent,
/// p = S rho^gamma.
struct GasModel {
    int n = 0;
    double gamma = 1.4;

    GasModel() = default;
    GasModel(int n_, double gamma_) : n(n_), gamma(gamma_) { validate(); }

    void validate() const {
        if (n < 0 || n > 2) throw std::domain_error("GasModel: n must be 0, 1 or 2");
        if (!(gamma > 1.0)) throw std::domain_error("GasModel: gamma must be > 1");
    }

    /// The special exponent (n+3)/(n+1) that admits the projective symmetry.
    double gamma_star() const { return static_cast<double>(n + 3) / static_cast<double>(n + 1); }

    bool is_gamma_star(double tol = 1e-12) const {
        double gs = gamma_star();
        return std::abs(gamma - gs) <= tol * gs;
    }
};

/// eps = p / ((gamma - 1) rho)
double specific_internal_energy(double rho, double p, const GasModel& gas);

/// S = p / rho^gamma
double entropy_variable(double rho, double p, const GasModel& gas);

/// Acoustic speed c = sqrt(gamma p / rho).
double sound_speed(double rho, double p, const GasModel& gas);

}  // namespace lagflow
