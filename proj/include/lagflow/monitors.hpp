#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "lagflow/flow_state.hpp"
#include "lagflow/gas_model.hpp"
#include "lagflow/scheme_config.hpp"

namespace lagflow {

/// Discrete conservation laws held by the schemes.
enum class DiscreteLaw {
    mass,               // [1/rho]_t = (R u^{(0.5)})_s          (implicit schemes)
    energy,             // [eps + (u^2+u_+^2)/4]_t + [R p*^{(a)} u^{(0.5)}]_s = 0
    momentum_n0,        // [u]_t + [p^{(a)}]_s = 0              (n = 0)
    center_of_mass_n0,  // [r - t u]_t - [t^{(0.5)} p^{(a)}]_s = 0  (n = 0)
    additional_1,       // modified scheme, gamma = gamma*
    additional_2,       // modified scheme, with the tau^2/8 <u^2> corrector
    mass_explicit,      // [1/rho]_t = (R u)_s                  (explicit scheme)
    entropy_pathline,   // [p/rho^gamma]_t = 0                  (explicit scheme)
};

const char* discrete_law_name(DiscreteLaw law);

bool discrete_law_applicable(DiscreteLaw law, SchemeKind scheme, const GasModel& gas);

/// One evaluated law between two accepted layers.
struct StepLawEval {
    Eigen::ArrayXd residual;  // per cell or per node, divergence form
    double total_old = 0.0;   // sum of densities times h^s
    double total_new = 0.0;
    double flux_left = 0.0;   // boundary values of the flux in [D]_t + [F]_s = 0
    double flux_right = 0.0;
};

StepLawEval discrete_law_eval(DiscreteLaw law, const FlowState& old_state,
                              const FlowState& new_state, const MassMesh& mesh,
                              const GasModel& gas, const SchemeConfig& cfg, double t_old,
                              double tau, SchemeKind scheme);

/// Residual array only, when the totals are not needed.
Eigen::ArrayXd discrete_cl_residual(DiscreteLaw law, const FlowState& old_state,
                                    const FlowState& new_state, const MassMesh& mesh,
                                    const GasModel& gas, const SchemeConfig& cfg, double t_old,
                                    double tau, SchemeKind scheme);

/// Per-cell residuals of Delta p / p^{(a)} = gamma Delta rho / rho^{(a)} and of
/// eps_t = -p^{(a)} (1/rho)_t.
std::pair<Eigen::ArrayXd, Eigen::ArrayXd> entropy_work_relations(const FlowState& old_state,
                                                                 const FlowState& new_state,
                                                                 const SchemeConfig& cfg,
                                                                 const GasModel& gas);

/// Cumulative drift bookkeeping for one law across a run.
class MonitorSeries {
public:
    MonitorSeries(DiscreteLaw law, SchemeKind scheme) : law_(law), scheme_(scheme) {}

    void record_step(const FlowState& old_state, const FlowState& new_state,
                     const MassMesh& mesh, const GasModel& gas, const SchemeConfig& cfg,
                     double t_old, double tau);

    DiscreteLaw law() const { return law_; }
    double total() const { return total_; }
    double total0() const { return total0_; }
    double flux_integral() const { return flux_integral_; }
    double max_abs_residual() const { return max_residual_; }

    /// Accumulated per-step defect |sum_k (total_new - total_old + tau flux)|
    /// relative to max(|total0|, 1).  Equals
    /// |total - total0 + integrated boundary flux| for a fixed step, and stays
    /// exact when tau varies and the density carries a tau-dependent corrector.
    double drift() const;

private:
    DiscreteLaw law_;
    SchemeKind scheme_;
    bool started_ = false;
    double total0_ = 0.0;
    double total_ = 0.0;
    double flux_integral_ = 0.0;
    double defect_sum_ = 0.0;
    double max_residual_ = 0.0;
};

}  // namespace lagflow
