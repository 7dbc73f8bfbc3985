#pragma once

#include <utility>

#include "lagflow/flow_state.hpp"
#include "lagflow/gas_model.hpp"
#include "lagflow/scheme_config.hpp"

namespace lagflow {

/// Discrete surrogate for r^n between the layers:
///   R = (r_hat^{n+1} - r^{n+1}) / ((n+1)(r_hat - r)),
/// i.e. 1 for n=0, (r_hat+r)/2 for n=1, (r_hat^2+r_hat r+r^2)/3 for n=2,
/// with the coincident-point limit r^n.
double r_factor(double r, double r_hat, int n);
double r_factor_d_rhat(double r, double r_hat, int n);

/// One implicit conservative step (weighted-pressure staggered scheme).
/// On success the returned state is the accepted new layer; on failure the
/// report has converged = false and the state is unspecified.
std::pair<FlowState, StepReport> sp_step(const FlowState& state, const MassMesh& mesh,
                                         const GasModel& gas, const SchemeConfig& cfg);

/// Same four equations closed by the corrected two-layer equation of state
/// that carries the tau^2/8 <u_t^2> and geometric terms; requires
/// gamma = gamma* and uses alpha = 0.5.
std::pair<FlowState, StepReport> sp_step_modified(const FlowState& state, const MassMesh& mesh,
                                                  const GasModel& gas, const SchemeConfig& cfg);

/// One step of the explicit invariant scheme (gamma = gamma*):
///   r_hat = r + tau u,
///   rho_hat (r_hat_+^{n+1} - r_hat^{n+1}) = rho (r_+^{n+1} - r^{n+1}),
///   p_hat = p (rho_hat/rho)^{gamma*},
///   u_hat = u - tau (rho_hat/rho)^{2/(n+1)} r^n (p - p_-)/h^s.
/// Preserves the cell-mass identity and p/rho^{gamma*} exactly.
FlowState explicit_invariant_step(const FlowState& state, const MassMesh& mesh,
                                  const GasModel& gas, const SchemeConfig& cfg);

/// Acoustic time-step bound in the mass coordinate:
///   tau = safety * min_i h^s / (rbar^n rho c),  c = sqrt(gamma p / rho),
/// capped at tau_max_factor * mesh.tau when mesh.tau > 0.
double cfl_timestep(const FlowState& state, const MassMesh& mesh, const GasModel& gas,
                    const SchemeConfig& cfg);

}  // namespace lagflow
