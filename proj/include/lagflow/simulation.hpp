#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lagflow/monitors.hpp"
#include "lagflow/run_config.hpp"

namespace lagflow {

struct SimulationResult {
    bool ok = false;
    std::string error;
    int steps = 0;
    int retries = 0;
    double final_t = 0.0;
    FlowState state;
    MassMesh mesh;
    std::vector<MonitorSeries> monitors;
    long newton_iterations = 0;
    double max_newton_residual = 0.0;
};

using SnapshotCallback =
    std::function<void(int step, double t, const FlowState&, const MassMesh&)>;
using MonitorRowCallback = std::function<void(double t, const MonitorSeries&)>;

/// Monitors chosen by the config (all laws applicable to scheme/gas if the
/// list is empty).
std::vector<DiscreteLaw> select_monitors(const RunConfig& cfg);

/// Advances the configured problem to t_end.  Failed steps retry with
/// halved tau; ok = false after repeated failure (partial state returned).
SimulationResult simulate(const RunConfig& cfg, const SnapshotCallback& on_snapshot = {},
                          const MonitorRowCallback& on_monitor_row = {});

/// File-producing driver: snapshots, monitor series CSV and summary JSON in
/// the output directory (LAGFLOW_OUTPUT_DIR overrides cfg.output_dir).
/// Returns the process exit code: 0 ok, 2 numerical failure.
int run_to_files(const RunConfig& cfg);

FlowState initial_state(const RunConfig& cfg, const Preset& preset, const MassMesh& mesh);

}  // namespace lagflow
