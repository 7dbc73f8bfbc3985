#include "lagflow/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace lagflow {

const char* preset_name(PresetId id) {
    switch (id) {
        case PresetId::uniform_static: return "uniform-static";
        case PresetId::galilean_slab: return "galilean-slab";
        case PresetId::isentropic_smooth: return "isentropic-smooth";
        case PresetId::power_entropy_smooth: return "power-entropy-smooth";
        case PresetId::exponential_entropy_smooth: return "exponential-entropy-smooth";
        case PresetId::sod_like_two_state: return "sod-like-two-state";
    }
    return "?";
}

PresetId preset_from_name(const std::string& name) {
    for (PresetId id :
         {PresetId::uniform_static, PresetId::galilean_slab, PresetId::isentropic_smooth,
          PresetId::power_entropy_smooth, PresetId::exponential_entropy_smooth,
          PresetId::sod_like_two_state})
        if (name == preset_name(id)) return id;
    throw std::invalid_argument("unknown preset: " + name);
}

std::pair<double, double> preset_s_range(PresetId id) {
    if (id == PresetId::power_entropy_smooth) return {0.5, 1.5};
    return {0.0, 1.0};
}

namespace {

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void reject_unknown(const std::map<std::string, double>& params,
                    std::initializer_list<const char*> known) {
    for (const auto& [k, v] : params) {
        bool ok = false;
        for (const char* name : known) ok = ok || k == name;
        if (!ok) throw std::invalid_argument("preset: unknown parameter '" + k + "'");
    }
}

}  // namespace

Preset make_preset(PresetId id, const GasModel& gas,
                   const std::map<std::string, double>& params) {
    const double g = gas.gamma;
    auto [s0, s1] = preset_s_range(id);
    const double span = s1 - s0;
    constexpr double two_pi = 6.283185307179586476925286766559;

    switch (id) {
        case PresetId::uniform_static: {
            reject_unknown(params, {"rho0", "p0"});
            double rho0 = get_param(params, "rho0", 1.0);
            double p0 = get_param(params, "p0", 1.0);
            InitialData d{[=](double) { return rho0; }, [](double) { return 0.0; },
                          [=](double) { return p0; }};
            return Preset{id, d, EntropyProfile::constant(p0 / std::pow(rho0, g)),
                          Bc::rigid_walls, true};
        }
        case PresetId::galilean_slab: {
            reject_unknown(params, {"rho0", "p0", "u0"});
            if (gas.n != 0) throw std::domain_error("galilean-slab preset requires n = 0");
            double rho0 = get_param(params, "rho0", 1.0);
            double p0 = get_param(params, "p0", 1.0);
            double u0 = get_param(params, "u0", 1.0);
            InitialData d{[=](double) { return rho0; }, [=](double) { return u0; },
                          [=](double) { return p0; }};
            return Preset{id, d, EntropyProfile::constant(p0 / std::pow(rho0, g)),
                          Bc::periodic_slab, true};
        }
        case PresetId::isentropic_smooth: {
            reject_unknown(params, {"amplitude", "A0"});
            double amp = get_param(params, "amplitude", 0.2);
            double A0 = get_param(params, "A0", 1.0);
            // cosine bump: the pressure gradient vanishes at the walls, so the
            // impulsive start stays compatible with pinned wall velocities
            auto rho = [=](double s) { return 1.0 + amp * std::cos(two_pi * (s - s0) / span); };
            InitialData d{rho, [](double) { return 0.0; },
                          [=](double s) { return A0 * std::pow(rho(s), g); }};
            return Preset{id, d, EntropyProfile::constant(A0), Bc::rigid_walls, true};
        }
        case PresetId::power_entropy_smooth: {
            reject_unknown(params, {"amplitude", "A0", "q"});
            double amp = get_param(params, "amplitude", 0.2);
            double A0 = get_param(params, "A0", 1.0);
            double q = get_param(params, "q", 1.0);
            EntropyProfile prof = EntropyProfile::power(A0, q);
            auto p = [=](double s) { return 1.0 + amp * std::cos(two_pi * (s - s0) / span); };
            InitialData d{[p, prof, g](double s) {
                              return std::pow(p(s) / prof.value(s), 1.0 / g);
                          },
                          [](double) { return 0.0; }, p};
            return Preset{id, d, prof, Bc::rigid_walls, true};
        }
        case PresetId::exponential_entropy_smooth: {
            reject_unknown(params, {"amplitude", "A0", "q"});
            double amp = get_param(params, "amplitude", 0.2);
            double A0 = get_param(params, "A0", 1.0);
            double q = get_param(params, "q", 1.0);
            EntropyProfile prof = EntropyProfile::exponential(A0, q);
            auto p = [=](double s) { return 1.0 + amp * std::cos(two_pi * (s - s0) / span); };
            InitialData d{[p, prof, g](double s) {
                              return std::pow(p(s) / prof.value(s), 1.0 / g);
                          },
                          [](double) { return 0.0; }, p};
            return Preset{id, d, prof, Bc::rigid_walls, true};
        }
        case PresetId::sod_like_two_state: {
            reject_unknown(params, {"rho_left", "rho_right", "p_left", "p_right"});
            double rl = get_param(params, "rho_left", 1.0);
            double rr = get_param(params, "rho_right", 0.125);
            double pl = get_param(params, "p_left", 1.0);
            double pr = get_param(params, "p_right", 0.1);
            double mid = 0.5 * (s0 + s1);
            InitialData d{[=](double s) { return s < mid ? rl : rr; },
                          [](double) { return 0.0; },
                          [=](double s) { return s < mid ? pl : pr; }};
            // two-state entropy, tabulated on a fine ramp
            std::vector<double> ss, SS;
            double Sl = pl / std::pow(rl, g), Sr = pr / std::pow(rr, g);
            for (int k = 0; k <= 32; ++k) {
                double x = s0 + span * k / 32.0;
                ss.push_back(x);
                SS.push_back(x < mid ? Sl : Sr);
            }
            return Preset{id, d, EntropyProfile::tabulated(ss, SS), Bc::rigid_walls, false};
        }
    }
    throw std::logic_error("make_preset: bad id");
}

}  // namespace lagflow
