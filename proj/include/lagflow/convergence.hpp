#pragma once

#include <vector>

#include "lagflow/run_config.hpp"

namespace lagflow {

struct ConvergenceRow {
    int level = 0;
    int cells = 0;
    double tau = 0.0;
    double error = 0.0;   // against the finest level; 0 on the finest row
    double order = 0.0;   // log2(e_k / e_{k+1}); NaN where undefined
};

/// Richardson self-convergence: runs `levels` simultaneous refinements
/// (cells and steps both doubled per level) and measures errors against the
/// finest level on common nodes/cells.  Requires a fixed time.tau in the
/// base config; levels run concurrently.
std::vector<ConvergenceRow> convergence_study(const RunConfig& base, int levels);

/// Observed order of the coarsest usable pair; NaN when errors vanish.
double observed_order(const std::vector<ConvergenceRow>& rows);

}  // namespace lagflow
