#pragma once

#include <string>
#include <vector>

#include "lagflow/gas_model.hpp"
#include "lagflow/stencil.hpp"

namespace lagflow {

enum class InvariantSet {
    euler_12,          // Eulerian stencil, n = 0 symmetries
    lagr_general_16,   // any n, gamma
    lagr_n0_14,        // n = 0
    lagr_gstar_15,     // n != 0, gamma = gamma*
    lagr_n0_g3_13,     // n = 0, gamma = 3
};

const char* invariant_set_name(InvariantSet set);
int invariant_set_size(InvariantSet set);
bool invariant_set_applicable(InvariantSet set, const GasModel& gas);

struct InvariantVector {
    InvariantSet set_id;
    std::vector<double> values;
    bool degenerate = false;  // some ratio hit a guarded 0/0 and was set to its limit
};

/// Evaluates the chosen invariant basis on a stencil.  Ratios whose numerator
/// and denominator both vanish (below 1e-300) are replaced by their limit 1
/// and flagged via `degenerate`.
InvariantVector compute_invariants(const Stencil& st, const GasModel& gas, InvariantSet set);

}  // namespace lagflow
