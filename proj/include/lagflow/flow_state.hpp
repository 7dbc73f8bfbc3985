#pragma once

#include <Eigen/Core>
#include <functional>

#include "lagflow/gas_model.hpp"

namespace lagflow {

/// Uniform mesh in the mass Lagrangian coordinate s, plus the current time
/// level and time step of a simulation.
///
/// Index convention used throughout: nodes are s_0 < ... < s_N and carry the
/// kinematic fields; cells carry half-integer labels, cell i stands for
/// s_{i+1/2} and holds the thermodynamic fields between nodes i and i+1.
struct MassMesh {
    Eigen::ArrayXd s;   // node coordinates, size N+1
    double hs = 0.0;    // uniform spacing
    double t = 0.0;     // current time level
    double tau = 0.0;   // current time step

    static MassMesh uniform(int n_cells, double s_min, double s_max, double t0 = 0.0,
                            double tau0 = 0.0);

    int n_cells() const { return static_cast<int>(s.size()) - 1; }
    double cell_center(int i) const { return 0.5 * (s[i] + s[i + 1]); }

    void validate() const;
};

/// Two-layer staggered snapshot of the gas at one time level: node kinematics
/// (r, u) and cell thermodynamics (rho, p, eps).
struct FlowState {
    Eigen::ArrayXd r;    // node positions, size N+1
    Eigen::ArrayXd u;    // node velocities, size N+1
    Eigen::ArrayXd rho;  // cell densities, size N
    Eigen::ArrayXd p;    // cell pressures, size N
    Eigen::ArrayXd eps;  // cell specific internal energies, size N

    int n_cells() const { return static_cast<int>(rho.size()); }

    /// Positivity, monotone r, matching sizes.  Throws std::domain_error.
    void validate(const GasModel& gas) const;
};

/// Closed-form initial fields in the mass coordinate.
struct InitialData {
    std::function<double(double)> rho;  // sampled at cell centers
    std::function<double(double)> u;    // sampled at nodes
    std::function<double(double)> p;    // sampled at cell centers
};

/// Builds a state whose node positions satisfy the cell-volume recursion
///   r_{i+1}^{n+1} = r_i^{n+1} + (n+1) h^s / rho_{i+1/2},   r_0 = r_origin,
/// so the discrete cell-mass identity holds exactly.
FlowState init_state(const InitialData& data, const MassMesh& mesh, const GasModel& gas,
                     double r_origin);

/// Max relative defect of rho_{i+1/2} (r_{i+1}^{n+1} - r_i^{n+1})/(n+1) = h^s.
double cell_mass_defect(const FlowState& state, const MassMesh& mesh, const GasModel& gas);

}  // namespace lagflow
