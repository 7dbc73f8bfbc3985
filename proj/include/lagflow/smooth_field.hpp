#pragma once

#include <functional>

#include "lagflow/conservation_laws.hpp"
#include "lagflow/entropy_profile.hpp"
#include "lagflow/gas_model.hpp"

namespace lagflow {

/// Value and partial derivatives of a test field phi(t, s) at one point.
struct FieldJet {
    double phi = 0.0;
    double phi_t = 0.0, phi_s = 0.0;
    double phi_tt = 0.0, phi_ts = 0.0, phi_ss = 0.0;
};

/// Smooth test field r = phi(t, s) on a rectangle, with analytic partials.
struct SmoothField {
    std::function<FieldJet(double t, double s)> jet;
    double t_lo = 0.0, t_hi = 1.0;
    double s_lo = 0.0, s_hi = 1.0;

    PhiSample sample(double t, double s, const EntropyProfile& profile) const {
        FieldJet j = jet(t, s);
        auto [S, dS] = profile.eval(s);
        return PhiSample{t, s, j.phi, j.phi_t, j.phi_s, S, dS};
    }
};

/// A family of bounded-frequency trigonometric fields phi = c0 + c1 s + ...,
/// kept positive with positive phi_s; used as generic non-solution fields.
SmoothField random_test_field(unsigned seed, double t_lo = 0.0, double t_hi = 1.0,
                              double s_lo = 0.5, double s_hi = 1.5);

/// E(phi) = phi_tt + phi^{n(1-gamma)} phi_s^{-gamma}
///          (S' - n gamma S phi_s/phi - gamma S phi_ss/phi_s).
/// Vanishes exactly on solutions of the flow equations.
double euler_lagrange_residual(const SmoothField& field, const GasModel& gas,
                               const EntropyProfile& profile, double t, double s);

double euler_lagrange_residual(const FieldJet& j, double S, double dS, const GasModel& gas);

}  // namespace lagflow
