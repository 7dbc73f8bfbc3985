#include "lagflow/run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace lagflow {

const char* scheme_name(SchemeKind k) {
    switch (k) {
        case SchemeKind::sp: return "sp";
        case SchemeKind::sp_modified: return "sp-modified";
        case SchemeKind::explicit_invariant: return "explicit-invariant";
    }
    return "?";
}

SchemeKind scheme_from_name(const std::string& name) {
    if (name == "sp") return SchemeKind::sp;
    if (name == "sp-modified") return SchemeKind::sp_modified;
    if (name == "explicit-invariant") return SchemeKind::explicit_invariant;
    throw std::invalid_argument("unknown scheme: " + name);
}

const char* bc_name(Bc bc) {
    switch (bc) {
        case Bc::rigid_walls: return "rigid-walls";
        case Bc::fixed_center: return "fixed-center";
        case Bc::periodic_slab: return "periodic-slab";
    }
    return "?";
}

Bc bc_from_name(const std::string& name) {
    if (name == "rigid-walls") return Bc::rigid_walls;
    if (name == "fixed-center") return Bc::fixed_center;
    if (name == "periodic-slab") return Bc::periodic_slab;
    throw std::invalid_argument("unknown bc: " + name);
}

std::pair<double, double> RunConfig::s_range() const {
    auto def = preset_s_range(preset);
    return {s_min.value_or(def.first), s_max.value_or(def.second)};
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

double to_number(const std::string& v, int line) {
    try {
        std::size_t used = 0;
        double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(line, "expected a number, got '" + v + "'");
    }
}

bool to_flag(const std::string& v, int line) {
    if (v == "on" || v == "true" || v == "1") return true;
    if (v == "off" || v == "false" || v == "0") return false;
    throw ConfigError(line, "expected on/off, got '" + v + "'");
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        auto hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty() || val.empty()) throw ConfigError(line, "expected 'key = value'");

        try {
            if (key == "gas.n") cfg.gas.n = static_cast<int>(to_number(val, line));
            else if (key == "gas.gamma") {
                if (val == "gamma-star") cfg.gas.gamma = 0.0;  // resolved after gas.n is known
                else cfg.gas.gamma = to_number(val, line);
            }
            else if (key == "scheme") cfg.scheme = scheme_from_name(val);
            else if (key == "alpha") cfg.scheme_cfg.alpha = to_number(val, line);
            else if (key == "newton_tol") cfg.scheme_cfg.newton_tol = to_number(val, line);
            else if (key == "newton_max_iter")
                cfg.scheme_cfg.newton_max_iter = static_cast<int>(to_number(val, line));
            else if (key == "cfl_safety") cfg.scheme_cfg.cfl_safety = to_number(val, line);
            else if (key == "tau_max_factor") cfg.scheme_cfg.tau_max_factor = to_number(val, line);
            else if (key == "bc") cfg.bc_override = bc_from_name(val);
            else if (key == "mesh.cells") cfg.cells = static_cast<int>(to_number(val, line));
            else if (key == "mesh.s_min") cfg.s_min = to_number(val, line);
            else if (key == "mesh.s_max") cfg.s_max = to_number(val, line);
            else if (key == "time.t_end") cfg.t_end = to_number(val, line);
            else if (key == "time.tau") cfg.tau = to_number(val, line);
            else if (key == "time.cfl") cfg.use_cfl = to_flag(val, line);
            else if (key == "preset") cfg.preset = preset_from_name(val);
            else if (key.rfind("preset.", 0) == 0)
                cfg.preset_params[key.substr(7)] = to_number(val, line);
            else if (key == "entropy.A0") cfg.preset_params["A0"] = to_number(val, line);
            else if (key == "entropy.q") cfg.preset_params["q"] = to_number(val, line);
            else if (key == "r_origin") cfg.r_origin = to_number(val, line);
            else if (key == "output.dir") cfg.output_dir = val;
            else if (key == "output.snapshot_every")
                cfg.snapshot_every = static_cast<int>(to_number(val, line));
            else if (key == "output.monitors") {
                cfg.monitors.clear();
                std::istringstream ms(val);
                std::string item;
                while (std::getline(ms, item, ',')) {
                    item = trim(item);
                    if (!item.empty()) cfg.monitors.push_back(item);
                }
            }
            else throw ConfigError(line, "unknown key '" + key + "'");
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw ConfigError(line, e.what());
        }
    }
    if (cfg.gas.gamma == 0.0) cfg.gas.gamma = cfg.gas.gamma_star();
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_run_config(ss.str());
}

void validate_run_config(const RunConfig& cfg) {
    cfg.gas.validate();
    cfg.scheme_cfg.validate();
    if (cfg.cells < 2) throw std::domain_error("config: mesh.cells must be >= 2");
    auto [a, b] = cfg.s_range();
    if (!(b > a)) throw std::domain_error("config: mesh.s_max must exceed mesh.s_min");
    if (!(cfg.t_end > 0.0)) throw std::domain_error("config: time.t_end must be > 0");
    if (!cfg.tau && !cfg.use_cfl)
        throw std::domain_error("config: set time.tau or time.cfl = on");
    if (cfg.tau && !(cfg.tau.value() > 0.0))
        throw std::domain_error("config: time.tau must be > 0");
    if ((cfg.scheme == SchemeKind::sp_modified ||
         cfg.scheme == SchemeKind::explicit_invariant) &&
        !cfg.gas.is_gamma_star())
        throw std::domain_error(
            "config: this scheme requires gamma = (n+3)/(n+1); set gas.gamma = gamma-star");
    if (cfg.gas.n >= 1 && cfg.r_origin < 0.0)
        throw std::domain_error("config: r_origin must be >= 0 for n >= 1");
    if (cfg.gas.n != 0) {
        if (cfg.preset == PresetId::galilean_slab)
            throw std::domain_error("config: galilean-slab preset requires gas.n = 0");
        if (cfg.bc_override && *cfg.bc_override == Bc::periodic_slab)
            throw std::domain_error("config: periodic-slab bc requires gas.n = 0");
    } else if (cfg.bc_override && *cfg.bc_override == Bc::fixed_center) {
        throw std::domain_error("config: fixed-center bc requires gas.n >= 1");
    }
}

}  // namespace lagflow
