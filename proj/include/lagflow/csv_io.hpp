#pragma once

#include <string>

#include "lagflow/flow_state.hpp"
#include "lagflow/gas_model.hpp"

namespace lagflow {

/// Formats a double with 17 significant digits (round-trips bit-exactly).
std::string format_full(double v);

/// Snapshot CSV: header row with units, one row per node; thermodynamic
/// columns on row i belong to cell i+1/2 and stay empty on the last row.
/// Columns: i, s, r, u, rho, p, eps, S.
void write_snapshot(const std::string& path, const FlowState& state, const MassMesh& mesh,
                    const GasModel& gas);

struct Snapshot {
    FlowState state;
    Eigen::ArrayXd s;
};

Snapshot read_snapshot(const std::string& path);

}  // namespace lagflow
