#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lagflow/gas_model.hpp"
#include "lagflow/presets.hpp"
#include "lagflow/scheme_config.hpp"

namespace lagflow {

/// Parsed and validated run configuration.  The entropy case is the one the
/// chosen preset realizes; entropy.A0/entropy.q feed the preset parameters.
struct RunConfig {
    GasModel gas;
    SchemeKind scheme = SchemeKind::sp;
    SchemeConfig scheme_cfg;

    int cells = 100;
    std::optional<double> s_min, s_max;  // preset default when unset

    double t_end = 0.1;
    std::optional<double> tau;  // fixed step; CFL-driven when unset
    bool use_cfl = false;

    PresetId preset = PresetId::uniform_static;
    std::map<std::string, double> preset_params;
    std::optional<Bc> bc_override;
    double r_origin = 0.0;

    std::string output_dir = "out";
    int snapshot_every = 0;  // 0: initial and final snapshots only
    std::vector<std::string> monitors;  // empty: all applicable laws

    std::pair<double, double> s_range() const;
    Bc bc(const Preset& p) const { return bc_override ? *bc_override : p.recommended_bc; }
};

struct ConfigError : std::runtime_error {
    int line;
    ConfigError(int line_, const std::string& msg)
        : std::runtime_error("config:" + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// Parses `key = value` lines ('#' comments, blank lines allowed).  Unknown
/// keys are hard errors carrying the offending line number.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

/// Full validation including scheme/gamma applicability.
void validate_run_config(const RunConfig& cfg);

}  // namespace lagflow
