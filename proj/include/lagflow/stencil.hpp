#pragma once

#include <stdexcept>

#include "lagflow/flow_state.hpp"

namespace lagflow {

/// The 21 two-time-layer stencil variables the finite-difference invariants
/// are built on.  The stencil is centred at node i: cells i-1/2 ("minus")
/// and i+1/2 (unadorned) carry the thermodynamic values, nodes i and i+1
/// ("plus") the kinematic ones; hats denote the upper time layer.
struct Stencil {
    double t, t_hat;
    double s, s_plus, s_minus;
    double u, u_plus, u_hat, u_hat_plus;
    double r, r_plus, r_hat, r_hat_plus;
    double rho, rho_minus, rho_hat, rho_hat_minus;
    double p, p_minus, p_hat, p_hat_minus;

    double tau() const { return t_hat - t; }
    double hs() const { return s_plus - s; }
    double hs_minus() const { return s - s_minus; }

    void validate() const {
        if (!(tau() > 0.0)) throw std::domain_error("Stencil: tau must be > 0");
        if (!(hs() > 0.0) || !(hs_minus() > 0.0))
            throw std::domain_error("Stencil: mass spacings must be > 0");
        for (double v : {rho, rho_minus, rho_hat, rho_hat_minus, p, p_minus, p_hat, p_hat_minus})
            if (!(v > 0.0)) throw std::domain_error("Stencil: rho and p must be > 0");
    }
};

/// Stencil centred at interior node i (1 <= i <= N-1) between two layers.
Stencil make_stencil(const FlowState& old_state, const FlowState& new_state,
                     const MassMesh& mesh, double t_old, double tau, int i);

}  // namespace lagflow
