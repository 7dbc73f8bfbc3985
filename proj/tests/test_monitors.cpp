#include <doctest.h>

#include <cmath>

#include "lagflow/conservation_laws.hpp"
#include "lagflow/errors.hpp"
#include "lagflow/monitors.hpp"
#include "lagflow/presets.hpp"
#include "lagflow/schemes.hpp"

using namespace lagflow;

TEST_SUITE_BEGIN("monitors");

namespace {

struct Run {
    GasModel gas;
    MassMesh mesh;
    std::vector<FlowState> layers;
    std::vector<double> times;
    SchemeConfig cfg;
    SchemeKind scheme;
};

Run short_run(SchemeKind scheme, PresetId pid, int n, double gamma, int cells, double tau,
              int steps) {
    Run run{GasModel(n, gamma), MassMesh(), {}, {}, SchemeConfig(), scheme};
    Preset preset = make_preset(pid, run.gas, {});
    auto [s0, s1] = preset_s_range(pid);
    run.mesh = MassMesh::uniform(cells, s0, s1, 0.0, tau);
    run.cfg.bc = preset.recommended_bc;
    run.cfg.newton_tol = 1e-12;
    FlowState cur = init_state(preset.data, run.mesh, run.gas, 0.0);
    run.layers.push_back(cur);
    run.times.push_back(0.0);
    for (int k = 0; k < steps; ++k) {
        if (scheme == SchemeKind::explicit_invariant) {
            cur = explicit_invariant_step(cur, run.mesh, run.gas, run.cfg);
        } else {
            auto [next, rep] =
                scheme == SchemeKind::sp
                    ? sp_step(cur, run.mesh, run.gas, run.cfg)
                    : sp_step_modified(cur, run.mesh, run.gas, run.cfg);
            REQUIRE(rep.converged);
            cur = next;
        }
        run.mesh.t += tau;
        run.layers.push_back(cur);
        run.times.push_back(run.mesh.t);
    }
    return run;
}

}  // namespace

TEST_CASE("implicit scheme satisfies its discrete laws pointwise") {
    Run run = short_run(SchemeKind::sp, PresetId::isentropic_smooth, 0, 1.4, 32, 0.002, 6);
    for (std::size_t j = 0; j + 1 < run.layers.size(); ++j) {
        for (DiscreteLaw law : {DiscreteLaw::mass, DiscreteLaw::energy,
                                DiscreteLaw::momentum_n0, DiscreteLaw::center_of_mass_n0}) {
            auto res = discrete_cl_residual(law, run.layers[j], run.layers[j + 1], run.mesh,
                                            run.gas, run.cfg, run.times[j], 0.002, run.scheme);
            CAPTURE(discrete_law_name(law));
            CHECK(res.abs().maxCoeff() <= 1e-11);
        }
    }
}

TEST_CASE("laws outside their regime are rejected") {
    Run run = short_run(SchemeKind::sp, PresetId::isentropic_smooth, 2, 1.4, 16, 0.002, 1);
    CHECK_THROWS_AS(discrete_cl_residual(DiscreteLaw::momentum_n0, run.layers[0], run.layers[1],
                                         run.mesh, run.gas, run.cfg, 0.0, 0.002, run.scheme),
                    applicability_error);
    CHECK_THROWS_AS(discrete_cl_residual(DiscreteLaw::additional_1, run.layers[0], run.layers[1],
                                         run.mesh, run.gas, run.cfg, 0.0, 0.002, run.scheme),
                    applicability_error);
}

TEST_CASE("totals telescope against the per-cell residuals") {
    Run run = short_run(SchemeKind::sp, PresetId::isentropic_smooth, 1, 1.4, 24, 0.003, 3);
    for (std::size_t j = 0; j + 1 < run.layers.size(); ++j) {
        auto ev = discrete_law_eval(DiscreteLaw::energy, run.layers[j], run.layers[j + 1],
                                    run.mesh, run.gas, run.cfg, run.times[j], 0.003,
                                    run.scheme);
        // sum of residuals times h tau equals the step drift plus boundary flux
        double lhs = ev.residual.sum() * run.mesh.hs * 0.003;
        double rhs = ev.total_new - ev.total_old + 0.003 * (ev.flux_right - ev.flux_left);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("mass total is constant with rigid walls") {
    Run run = short_run(SchemeKind::sp, PresetId::isentropic_smooth, 1, 1.4, 24, 0.003, 8);
    MonitorSeries mon(DiscreteLaw::mass, SchemeKind::sp);
    for (std::size_t j = 0; j + 1 < run.layers.size(); ++j)
        mon.record_step(run.layers[j], run.layers[j + 1], run.mesh, run.gas, run.cfg,
                        run.times[j], 0.003);
    CHECK(mon.drift() <= 8 * 1e-13);
    // walls do not move, so the boundary flux vanishes identically
    CHECK(mon.flux_integral() == 0.0);
}

TEST_CASE("explicit-scheme monitors") {
    Run run = short_run(SchemeKind::explicit_invariant, PresetId::isentropic_smooth, 1, 2.0, 24,
                        0.001, 10);
    for (std::size_t j = 0; j + 1 < run.layers.size(); ++j) {
        auto mass = discrete_cl_residual(DiscreteLaw::mass_explicit, run.layers[j],
                                         run.layers[j + 1], run.mesh, run.gas, run.cfg,
                                         run.times[j], 0.001, run.scheme);
        auto ent = discrete_cl_residual(DiscreteLaw::entropy_pathline, run.layers[j],
                                        run.layers[j + 1], run.mesh, run.gas, run.cfg,
                                        run.times[j], 0.001, run.scheme);
        CHECK(mass.abs().maxCoeff() <= 1e-11);
        CHECK(ent.abs().maxCoeff() <= 1e-11);
    }
}

TEST_CASE("work relation reported for the explicit scheme but not asserted") {
    Run run = short_run(SchemeKind::explicit_invariant, PresetId::isentropic_smooth, 0, 3.0, 16,
                        0.001, 1);
    auto [entropy_res, work_res] = entropy_work_relations(run.layers[0], run.layers[1], run.cfg,
                                                          run.gas);
    CHECK(entropy_res.abs().maxCoeff() <= 1e-12);  // exact S conservation implies this
    CHECK(std::isfinite(work_res.abs().maxCoeff()));
}

TEST_CASE("continuous-law residuals vanish at second order on scheme output") {
    // collocate the catalogued densities on the solution lattice and
    // difference them; refining (h, tau) together must cut the defect ~4x
    auto residual_at = [](int cells, double tau, int steps) {
        Run run = short_run(SchemeKind::sp, PresetId::isentropic_smooth, 1, 1.4, cells, tau,
                            steps);
        EntropyProfile iso = EntropyProfile::constant(1.0);
        auto laws = catalog(run.gas, iso);
        const int N = cells;
        double worst = 0.0;
        for (std::size_t j = 1; j + 1 < run.layers.size(); ++j) {
            for (int i = 2; i <= N - 2; ++i) {
                auto sample = [&](std::size_t layer, int node) {
                    GasSample g;
                    g.t = run.times[layer];
                    g.s = run.mesh.s[node];
                    g.r = run.layers[layer].r[node];
                    g.u = run.layers[layer].u[node];
                    g.rho = 0.5 * (run.layers[layer].rho[node - 1] +
                                   run.layers[layer].rho[node]);
                    g.p = 0.5 * (run.layers[layer].p[node - 1] + run.layers[layer].p[node]);
                    g.S = 1.0;
                    return g;
                };
                for (const auto& law : laws) {
                    if (law.id == LawId::mass) continue;  // identically constant density
                    double dTt = (law.Tt_gas(sample(j + 1, i)) - law.Tt_gas(sample(j - 1, i))) /
                                 (2.0 * tau);
                    double dTs = (law.Ts_gas(sample(j, i + 1)) - law.Ts_gas(sample(j, i - 1))) /
                                 (2.0 * run.mesh.hs);
                    worst = std::max(worst, std::abs(dTt + dTs));
                }
            }
        }
        return worst;
    };
    double coarse = residual_at(16, 0.004, 6);
    double fine = residual_at(32, 0.002, 12);
    CHECK(coarse > 1e-6);  // genuinely nonzero at finite resolution
    double order = std::log2(coarse / fine);
    CHECK(order >= 1.5);
}

TEST_SUITE_END();
