#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <cmath>

#include "lagflow/convergence.hpp"
#include "lagflow/csv_io.hpp"
#include "lagflow/run_config.hpp"
#include "lagflow/simulation.hpp"

using namespace lagflow;
namespace fs = std::filesystem;

TEST_SUITE_BEGIN("cli-io");

namespace {

const char* kBaseConfig = R"(
# smooth isentropic slab
gas.n = 0
gas.gamma = 1.4
scheme = sp
alpha = 0.5
mesh.cells = 24
time.t_end = 0.02
time.tau = 0.002
preset = isentropic-smooth
preset.amplitude = 0.15
output.snapshot_every = 5
)";

std::string read_file(const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("config parses and validates") {
    RunConfig cfg = parse_run_config(kBaseConfig);
    CHECK(cfg.gas.n == 0);
    CHECK(cfg.gas.gamma == 1.4);
    CHECK(cfg.scheme == SchemeKind::sp);
    CHECK(cfg.cells == 24);
    CHECK(cfg.tau.value() == 0.002);
    CHECK(cfg.preset == PresetId::isentropic_smooth);
    CHECK(cfg.preset_params.at("amplitude") == 0.15);
    validate_run_config(cfg);
}

TEST_CASE("unknown keys fail with the offending line") {
    std::string text = "gas.n = 0\ngas.gamma = 1.4\nbogus.key = 3\n";
    try {
        parse_run_config(text);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("bogus.key") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_run_config("gas.n = zero\n"), ConfigError);
    CHECK_THROWS_AS(parse_run_config("gas.n 0\n"), ConfigError);
}

TEST_CASE("scheme applicability is validated at load") {
    std::string text = std::string(kBaseConfig) + "scheme = explicit-invariant\n";
    RunConfig cfg = parse_run_config(text);
    CHECK_THROWS_AS(validate_run_config(cfg), std::domain_error);  // gamma != gamma*

    std::string ok = std::string(kBaseConfig) +
                     "scheme = explicit-invariant\ngas.gamma = gamma-star\n";
    RunConfig cfg2 = parse_run_config(ok);
    CHECK(cfg2.gas.gamma == 3.0);
    validate_run_config(cfg2);
}

TEST_CASE("snapshots reload bit-exactly") {
    RunConfig cfg = parse_run_config(kBaseConfig);
    Preset preset = make_preset(cfg.preset, cfg.gas, cfg.preset_params);
    auto [s0, s1] = cfg.s_range();
    MassMesh mesh = MassMesh::uniform(cfg.cells, s0, s1);
    FlowState st = initial_state(cfg, preset, mesh);

    fs::path dir = fs::temp_directory_path() / "lagflow_test_io";
    fs::create_directories(dir);
    std::string path = (dir / "snap.csv").string();
    write_snapshot(path, st, mesh, cfg.gas);
    Snapshot snap = read_snapshot(path);
    REQUIRE(snap.state.n_cells() == st.n_cells());
    for (int i = 0; i <= st.n_cells(); ++i) {
        CHECK(snap.s[i] == mesh.s[i]);
        CHECK(snap.state.r[i] == st.r[i]);
        CHECK(snap.state.u[i] == st.u[i]);
    }
    for (int c = 0; c < st.n_cells(); ++c) {
        CHECK(snap.state.rho[c] == st.rho[c]);
        CHECK(snap.state.p[c] == st.p[c]);
        CHECK(snap.state.eps[c] == st.eps[c]);
    }
    fs::remove_all(dir);
}

TEST_CASE("runs are deterministic byte for byte") {
    RunConfig cfg = parse_run_config(kBaseConfig);
    fs::path dir1 = fs::temp_directory_path() / "lagflow_det_1";
    fs::path dir2 = fs::temp_directory_path() / "lagflow_det_2";
    for (const auto& d : {dir1, dir2}) {
        fs::remove_all(d);
        cfg.output_dir = d.string();
        CHECK(run_to_files(cfg) == 0);
    }
    for (const auto& name : {"summary.json", "monitors.csv", "snapshot_000000.csv",
                             "snapshot_000010.csv"}) {
        CAPTURE(name);
        CHECK(read_file(dir1 / name) == read_file(dir2 / name));
    }
    fs::remove_all(dir1);
    fs::remove_all(dir2);
}

TEST_CASE("uniform static run stays quiet") {
    RunConfig cfg = parse_run_config(kBaseConfig);
    cfg.preset = PresetId::uniform_static;
    cfg.preset_params.clear();
    cfg.tau = 0.01;
    cfg.t_end = 1.0;  // 100 steps
    SimulationResult res = simulate(cfg);
    REQUIRE(res.ok);
    CHECK(res.steps == 100);
    for (const auto& mon : res.monitors) CHECK(mon.drift() <= 1e-12);
}

TEST_CASE("sod-like run completes with conservative drifts") {
    RunConfig cfg = parse_run_config(kBaseConfig);
    cfg.preset = PresetId::sod_like_two_state;
    cfg.preset_params.clear();
    cfg.cells = 64;
    cfg.tau.reset();
    cfg.use_cfl = true;
    cfg.t_end = 0.08;
    SimulationResult res = simulate(cfg);
    REQUIRE(res.ok);
    CHECK(res.final_t == doctest::Approx(0.08));
    for (const auto& mon : res.monitors) {
        if (mon.law() == DiscreteLaw::mass || mon.law() == DiscreteLaw::energy)
            CHECK(mon.drift() <= 1e-10);
    }
}

TEST_CASE("tau-corrected law stays conserved under a varying step") {
    // the second additional law carries a tau^2 density corrector; its drift
    // bookkeeping must telescope per step even when the CFL step wanders
    RunConfig cfg = parse_run_config(kBaseConfig);
    cfg.gas = GasModel(2, 5.0 / 3.0);
    cfg.scheme = SchemeKind::sp_modified;
    cfg.cells = 32;
    cfg.tau.reset();
    cfg.use_cfl = true;
    cfg.scheme_cfg.cfl_safety = 0.4;
    cfg.t_end = 0.1;
    cfg.preset_params = {{"amplitude", 0.25}};
    SimulationResult res = simulate(cfg);
    REQUIRE(res.ok);
    for (const auto& mon : res.monitors) {
        CAPTURE(discrete_law_name(mon.law()));
        CHECK(mon.drift() <= 1e-10);
    }
}

TEST_CASE("galilean slab translates through the periodic boundary") {
    RunConfig cfg = parse_run_config(kBaseConfig);
    cfg.preset = PresetId::galilean_slab;
    cfg.preset_params = {{"u0", 1.0}};
    cfg.tau = 0.01;
    cfg.t_end = 0.5;
    SimulationResult res = simulate(cfg);
    REQUIRE(res.ok);
    for (const auto& mon : res.monitors) CHECK(mon.drift() <= 1e-12);
    // the slab advanced by u0 t while the fields stayed uniform
    CHECK(res.state.r[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK((res.state.rho - 1.0).abs().maxCoeff() <= 1e-13);
    CHECK((res.state.u - 1.0).abs().maxCoeff() <= 1e-13);
}

TEST_CASE("convergence flags undefined orders on exact data") {
    RunConfig cfg = parse_run_config(kBaseConfig);
    cfg.preset = PresetId::uniform_static;
    cfg.preset_params.clear();
    cfg.cells = 8;
    cfg.tau = 0.005;
    cfg.t_end = 0.02;
    auto rows = convergence_study(cfg, 3);
    for (const auto& row : rows) CHECK(row.error <= 1e-14);
    CHECK(std::isnan(observed_order(rows)));
}

TEST_CASE("monitor selection rejects inapplicable laws") {
    RunConfig cfg = parse_run_config(kBaseConfig);
    cfg.gas.n = 2;
    cfg.monitors = {"momentum"};
    CHECK_THROWS_AS(select_monitors(cfg), std::domain_error);
    cfg.monitors = {"no-such-law"};
    CHECK_THROWS_AS(select_monitors(cfg), std::domain_error);
}

TEST_CASE("all presets yield positive states") {
    for (PresetId id : {PresetId::uniform_static, PresetId::galilean_slab,
                        PresetId::isentropic_smooth, PresetId::power_entropy_smooth,
                        PresetId::exponential_entropy_smooth, PresetId::sod_like_two_state}) {
        GasModel gas(0, 1.4);
        Preset preset = make_preset(id, gas, {});
        auto [s0, s1] = preset_s_range(id);
        MassMesh mesh = MassMesh::uniform(32, s0, s1);
        FlowState st = init_state(preset.data, mesh, gas, 0.0);
        CHECK(st.rho.minCoeff() > 0.0);
        CHECK(st.p.minCoeff() > 0.0);
    }
    CHECK_THROWS_AS(make_preset(PresetId::uniform_static, GasModel(0, 1.4), {{"junk", 1.0}}),
                    std::invalid_argument);
}

TEST_SUITE_END();
