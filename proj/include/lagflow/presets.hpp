#pragma once

#include <map>
#include <string>

#include "lagflow/entropy_profile.hpp"
#include "lagflow/flow_state.hpp"
#include "lagflow/gas_model.hpp"
#include "lagflow/scheme_config.hpp"

namespace lagflow {

enum class PresetId {
    uniform_static,
    galilean_slab,            // n = 0, uniformly translating slab
    isentropic_smooth,
    power_entropy_smooth,
    exponential_entropy_smooth,
    sod_like_two_state,
};

const char* preset_name(PresetId id);
PresetId preset_from_name(const std::string& name);

struct Preset {
    PresetId id;
    InitialData data;
    EntropyProfile profile;   // entropy case the initial fields realize
    Bc recommended_bc;
    bool smooth;              // safe for convergence studies
};

/// Parameters: "amplitude" (smooth presets, default 0.2), "u0" (galilean
/// slab speed, default 1), "A0"/"q" (entropy cases), "rho0"/"p0" (uniform
/// levels).  Unknown parameter names are rejected.
Preset make_preset(PresetId id, const GasModel& gas,
                   const std::map<std::string, double>& params = {});

/// Default mass-coordinate range of a preset (power case avoids s = 0).
std::pair<double, double> preset_s_range(PresetId id);

}  // namespace lagflow
