#include "lagflow/simulation.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "lagflow/csv_io.hpp"
#include "lagflow/schemes.hpp"

namespace lagflow {

namespace {
namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
}  // namespace

std::vector<DiscreteLaw> select_monitors(const RunConfig& cfg) {
    std::vector<DiscreteLaw> all = {
        DiscreteLaw::mass,          DiscreteLaw::energy,       DiscreteLaw::momentum_n0,
        DiscreteLaw::center_of_mass_n0, DiscreteLaw::additional_1, DiscreteLaw::additional_2,
        DiscreteLaw::mass_explicit, DiscreteLaw::entropy_pathline};
    std::vector<DiscreteLaw> out;
    if (cfg.monitors.empty()) {
        for (DiscreteLaw law : all)
            if (discrete_law_applicable(law, cfg.scheme, cfg.gas)) out.push_back(law);
        return out;
    }
    for (const std::string& name : cfg.monitors) {
        bool found = false;
        for (DiscreteLaw law : all) {
            if (name == discrete_law_name(law)) {
                if (!discrete_law_applicable(law, cfg.scheme, cfg.gas))
                    throw std::domain_error("monitor '" + name +
                                            "' not applicable to this scheme/gas");
                out.push_back(law);
                found = true;
                break;
            }
        }
        if (!found) throw std::domain_error("unknown monitor '" + name + "'");
    }
    return out;
}

FlowState initial_state(const RunConfig& cfg, const Preset& preset, const MassMesh& mesh) {
    // r_origin is the center for n >= 1 and the left slab face for n = 0
    return init_state(preset.data, mesh, cfg.gas, cfg.r_origin);
}

SimulationResult simulate(const RunConfig& cfg, const SnapshotCallback& on_snapshot,
                          const MonitorRowCallback& on_monitor_row) {
    validate_run_config(cfg);
    Preset preset = make_preset(cfg.preset, cfg.gas, cfg.preset_params);

    auto [s0, s1] = cfg.s_range();
    MassMesh mesh = MassMesh::uniform(cfg.cells, s0, s1);
    SchemeConfig scfg = cfg.scheme_cfg;
    scfg.bc = cfg.bc(preset);

    SimulationResult res;
    res.state = initial_state(cfg, preset, mesh);
    res.mesh = mesh;

    for (DiscreteLaw law : select_monitors(cfg))
        res.monitors.emplace_back(law, cfg.scheme);

    if (on_snapshot) on_snapshot(0, 0.0, res.state, res.mesh);

    double t = 0.0;
    double tau0 = 0.0;
    const double t_eps = 1e-12 * cfg.t_end;
    while (t < cfg.t_end - t_eps) {
        double tau;
        if (cfg.use_cfl) {
            tau = cfl_timestep(res.state, res.mesh, cfg.gas, scfg);
            if (!std::isfinite(tau) || !(tau > 0.0)) {
                res.error = "CFL step degenerate";
                return res;
            }
        } else {
            tau = *cfg.tau;
        }
        if (tau0 == 0.0) tau0 = tau;
        tau = std::min(tau, scfg.tau_max_factor * tau0);
        tau = std::min(tau, cfg.t_end - t);

        bool accepted = false;
        FlowState next;
        for (int attempt = 0; attempt < 9 && !accepted; ++attempt) {
            res.mesh.t = t;
            res.mesh.tau = tau;
            try {
                if (cfg.scheme == SchemeKind::explicit_invariant) {
                    next = explicit_invariant_step(res.state, res.mesh, cfg.gas, scfg);
                    accepted = true;
                } else {
                    auto [st, rep] = cfg.scheme == SchemeKind::sp
                                         ? sp_step(res.state, res.mesh, cfg.gas, scfg)
                                         : sp_step_modified(res.state, res.mesh, cfg.gas, scfg);
                    res.newton_iterations += rep.iterations;
                    res.max_newton_residual = std::max(res.max_newton_residual, rep.residual);
                    if (rep.converged) {
                        next = st;
                        accepted = true;
                    }
                }
            } catch (const std::runtime_error&) {
                // tangled mesh or positivity loss; retry smaller
            }
            if (!accepted) {
                tau *= 0.5;
                ++res.retries;
            }
        }
        if (!accepted) {
            res.error = "step failed after retries at t = " + std::to_string(t);
            res.final_t = t;
            return res;
        }

        for (auto& mon : res.monitors)
            mon.record_step(res.state, next, res.mesh, cfg.gas, scfg, t, tau);
        res.state = std::move(next);
        t += tau;
        ++res.steps;
        if (on_monitor_row)
            for (auto& mon : res.monitors) on_monitor_row(t, mon);
        if (on_snapshot && cfg.snapshot_every > 0 && res.steps % cfg.snapshot_every == 0)
            on_snapshot(res.steps, t, res.state, res.mesh);
    }

    res.final_t = t;
    res.ok = true;
    if (on_snapshot) on_snapshot(res.steps, t, res.state, res.mesh);
    return res;
}

int run_to_files(const RunConfig& cfg) {
    std::string out_dir = cfg.output_dir;
    if (const char* env = std::getenv("LAGFLOW_OUTPUT_DIR")) out_dir = env;
    fs::create_directories(out_dir);

    std::ofstream monitors_csv(out_dir + "/monitors.csv");
    monitors_csv << "t [time],law_id,total,drift [relative],max_abs_residual\n";

    auto snapshot_path = [&](int step) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "snapshot_%06d.csv", step);
        return out_dir + "/" + buf;
    };

    SimulationResult res = simulate(
        cfg,
        [&](int step, double, const FlowState& st, const MassMesh& mesh) {
            write_snapshot(snapshot_path(step), st, mesh, cfg.gas);
        },
        [&](double t, const MonitorSeries& mon) {
            monitors_csv << format_full(t) << ',' << discrete_law_name(mon.law()) << ','
                         << format_full(mon.total()) << ',' << format_full(mon.drift()) << ','
                         << format_full(mon.max_abs_residual()) << '\n';
        });

    ordered_json summary;
    summary["steps"] = res.steps;
    summary["final_t"] = res.final_t;
    summary["retries"] = res.retries;
    ordered_json laws = ordered_json::object();
    for (const auto& mon : res.monitors) {
        ordered_json entry;
        entry["total_initial"] = mon.total0();
        entry["total_final"] = mon.total();
        entry["drift"] = mon.drift();
        entry["max_abs_residual"] = mon.max_abs_residual();
        laws[discrete_law_name(mon.law())] = entry;
    }
    summary["laws"] = laws;
    ordered_json newton;
    newton["iterations"] = res.newton_iterations;
    newton["max_residual"] = res.max_newton_residual;
    summary["newton"] = newton;
    summary["status"] = res.ok ? "ok" : res.error;

    std::ofstream(out_dir + "/summary.json") << summary.dump(2) << '\n';
    return res.ok ? 0 : 2;
}

}  // namespace lagflow
