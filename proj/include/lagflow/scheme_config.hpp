#pragma once

#include <stdexcept>
#include <string>

namespace lagflow {

enum class SchemeKind { sp, sp_modified, explicit_invariant };

const char* scheme_name(SchemeKind k);
SchemeKind scheme_from_name(const std::string& name);

enum class Bc {
    rigid_walls,   // u = 0 pinned at both end nodes
    fixed_center,  // r_0 = 0, u_0 = 0 at the center node (n >= 1), rigid outer wall
    periodic_slab, // n = 0 slab with identified end nodes
};

const char* bc_name(Bc bc);
Bc bc_from_name(const std::string& name);

struct SchemeConfig {
    double alpha = 0.5;        // pressure weight between time layers
    double newton_tol = 1e-12;
    int newton_max_iter = 50;
    Bc bc = Bc::rigid_walls;
    double cfl_safety = 0.5;
    double tau_max_factor = 10.0;  // cap on tau growth relative to the initial step

    void validate() const {
        if (alpha < 0.0 || alpha > 1.0)
            throw std::domain_error("SchemeConfig: alpha must lie in [0, 1]");
        if (!(newton_tol > 0.0)) throw std::domain_error("SchemeConfig: newton_tol must be > 0");
        if (!(cfl_safety > 0.0 && cfl_safety <= 1.0))
            throw std::domain_error("SchemeConfig: cfl_safety must lie in (0, 1]");
    }
};

struct StepReport {
    int iterations = 0;
    double residual = 0.0;  // final max-norm of the nonlinear system
    double tau = 0.0;       // step actually taken
    bool converged = false;
};

}  // namespace lagflow
