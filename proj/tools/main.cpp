#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lagflow/convergence.hpp"
#include "lagflow/csv_io.hpp"
#include "lagflow/invariance_check.hpp"
#include "lagflow/simulation.hpp"
#include "lagflow/verify.hpp"

namespace {

using lagflow::RunConfig;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

std::string output_dir_for(const RunConfig& cfg) {
    if (const char* env = std::getenv("LAGFLOW_OUTPUT_DIR")) return env;
    return cfg.output_dir;
}

int cmd_run(const std::string& config_path) {
    RunConfig cfg = lagflow::load_run_config(config_path);
    lagflow::validate_run_config(cfg);
    return lagflow::run_to_files(cfg);
}

int cmd_verify(const std::string& suite, const std::string& out_path) {
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = {"noether", "eulerian-conversion", "inhomogeneous", "invariants",
                  "scheme-invariance"};
    } else {
        suites = {suite};
    }
    ordered_json doc = ordered_json::array();
    bool pass = true;
    for (const auto& name : suites) {
        lagflow::VerifyReport rep = lagflow::run_verify_suite(name);
        pass = pass && rep.pass;
        ordered_json entry;
        entry["suite"] = rep.suite;
        entry["pass"] = rep.pass;
        entry["checks"] = rep.records;
        doc.push_back(entry);
    }
    std::cout << doc.dump(2) << std::endl;
    if (!out_path.empty()) std::ofstream(out_path) << doc.dump(2) << '\n';
    return pass ? kExitOk : kExitNumerical;
}

int cmd_convergence(const std::string& config_path, int levels) {
    RunConfig cfg = lagflow::load_run_config(config_path);
    lagflow::validate_run_config(cfg);
    if (!cfg.tau) {
        std::cerr << "convergence needs a fixed time.tau in the config\n";
        return kExitValidation;
    }
    lagflow::Preset preset = lagflow::make_preset(cfg.preset, cfg.gas, cfg.preset_params);
    if (!preset.smooth)
        std::cerr << "warning: preset '" << lagflow::preset_name(cfg.preset)
                  << "' is not smooth; observed orders may be meaningless\n";

    auto rows = lagflow::convergence_study(cfg, levels);
    std::string dir = output_dir_for(cfg);
    std::filesystem::create_directories(dir);
    std::ofstream csv(dir + "/convergence.csv");
    auto emit = [&](std::ostream& os) {
        os << "level,cells,tau [time],error_vs_finest,observed_order\n";
        for (const auto& row : rows) {
            os << row.level << ',' << row.cells << ',' << lagflow::format_full(row.tau) << ','
               << lagflow::format_full(row.error) << ',';
            if (std::isfinite(row.order)) os << lagflow::format_full(row.order);
            else os << "undefined";
            os << '\n';
        }
    };
    emit(csv);
    emit(std::cout);
    return kExitOk;
}

int cmd_invariance(const std::string& config_path, const std::string& generator,
                   const std::vector<double>& a_list, int steps) {
    RunConfig cfg = lagflow::load_run_config(config_path);
    lagflow::validate_run_config(cfg);
    if (!cfg.tau) {
        std::cerr << "invariance needs a fixed time.tau in the config\n";
        return kExitValidation;
    }
    lagflow::Preset preset = lagflow::make_preset(cfg.preset, cfg.gas, cfg.preset_params);
    auto [s0, s1] = cfg.s_range();
    lagflow::MassMesh mesh = lagflow::MassMesh::uniform(cfg.cells, s0, s1, 0.0, *cfg.tau);
    lagflow::SchemeConfig scfg = cfg.scheme_cfg;
    scfg.bc = cfg.bc(preset);
    lagflow::FlowState state = lagflow::initial_state(cfg, preset, mesh);

    auto segment =
        lagflow::collect_segment(cfg.scheme, state, mesh, cfg.gas, scfg, steps);
    lagflow::GeneratorGD gen = lagflow::make_generator(
        lagflow::generator_from_name(generator), lagflow::Frame::lagrangian, cfg.gas);
    auto reports =
        lagflow::scheme_invariance_check(cfg.scheme, gen, segment, cfg.gas, scfg, a_list);

    ordered_json doc = ordered_json::array();
    for (const auto& rep : reports) {
        ordered_json r;
        r["scheme"] = lagflow::scheme_name(cfg.scheme);
        r["generator"] = generator;
        r["a"] = rep.a;
        r["max_residual"] = rep.max_residual;
        r["verdict"] = rep.invariant ? "invariant" : "not-invariant";
        doc.push_back(r);
    }
    std::cout << doc.dump(2) << std::endl;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-dimensional polytropic gas flows in mass Lagrangian coordinates"};
    app.require_subcommand(1);

    std::string config_path, suite = "all", generator = "galilean", out_path;
    int levels = 4, steps = 4;
    std::vector<double> a_list{0.5};

    auto* run = app.add_subcommand("run", "advance a configured problem and write outputs");
    run->add_option("config", config_path, "config file")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite,
                       "noether | eulerian-conversion | inhomogeneous | invariants | "
                       "scheme-invariance | all");
    verify->add_option("--out", out_path, "also write the JSON report to this file");

    auto* conv = app.add_subcommand("convergence", "Richardson self-convergence ladder");
    conv->add_option("config", config_path, "config file")->required();
    conv->add_option("--levels", levels, "refinement levels")->check(CLI::Range(2, 8));

    auto* inv = app.add_subcommand("invariance", "transform a run and re-check the scheme");
    inv->add_option("config", config_path, "config file")->required();
    inv->add_option("--generator", generator, "symmetry generator name");
    inv->add_option("--a", a_list, "group parameters");
    inv->add_option("--steps", steps, "segment length in steps");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path);
        if (verify->parsed()) return cmd_verify(suite, out_path);
        if (conv->parsed()) return cmd_convergence(config_path, levels);
        if (inv->parsed()) return cmd_invariance(config_path, generator, a_list, steps);
    } catch (const lagflow::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}
