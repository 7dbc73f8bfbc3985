#include "lagflow/convergence.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

#include "lagflow/simulation.hpp"

namespace lagflow {

namespace {

double level_error(const SimulationResult& coarse, const SimulationResult& fine, int stride) {
    const int Nc = coarse.state.n_cells();
    double acc = 0.0;
    long count = 0;
    for (int i = 0; i <= Nc; ++i) {
        double du = coarse.state.u[i] - fine.state.u[i * stride];
        double dr = coarse.state.r[i] - fine.state.r[i * stride];
        acc += du * du + dr * dr;
        count += 2;
    }
    for (int c = 0; c < Nc; ++c) {
        double rho_f = 0.0, p_f = 0.0;
        for (int k = 0; k < stride; ++k) {
            rho_f += fine.state.rho[c * stride + k];
            p_f += fine.state.p[c * stride + k];
        }
        rho_f /= stride;
        p_f /= stride;
        double drho = coarse.state.rho[c] - rho_f;
        double dp = coarse.state.p[c] - p_f;
        acc += drho * drho + dp * dp;
        count += 2;
    }
    return std::sqrt(acc / count);
}

}  // namespace

std::vector<ConvergenceRow> convergence_study(const RunConfig& base, int levels) {
    if (levels < 2) throw std::invalid_argument("convergence_study: need at least 2 levels");
    if (!base.tau) throw std::invalid_argument("convergence_study: base config needs time.tau");

    std::vector<RunConfig> cfgs;
    for (int k = 0; k < levels; ++k) {
        RunConfig c = base;
        c.cells = base.cells << k;
        c.tau = *base.tau / (1 << k);
        c.use_cfl = false;
        cfgs.push_back(c);
    }

    std::vector<std::future<SimulationResult>> futures;
    futures.reserve(cfgs.size());
    for (const auto& c : cfgs)
        futures.push_back(std::async(std::launch::async, [c]() { return simulate(c); }));

    std::vector<SimulationResult> results;
    results.reserve(futures.size());
    for (auto& f : futures) results.push_back(f.get());
    for (const auto& r : results)
        if (!r.ok) throw std::runtime_error("convergence_study: level failed: " + r.error);

    std::vector<ConvergenceRow> rows(levels);
    const SimulationResult& finest = results.back();
    for (int k = 0; k < levels; ++k) {
        rows[k].level = k;
        rows[k].cells = cfgs[k].cells;
        rows[k].tau = *cfgs[k].tau;
        rows[k].error =
            (k + 1 == levels) ? 0.0 : level_error(results[k], finest, 1 << (levels - 1 - k));
    }
    for (int k = 0; k + 2 < levels; ++k) {
        if (rows[k].error > 0.0 && rows[k + 1].error > 0.0)
            rows[k].order = std::log2(rows[k].error / rows[k + 1].error);
        else
            rows[k].order = std::nan("");
    }
    if (levels >= 2) rows[levels - 2].order = std::nan("");
    rows[levels - 1].order = std::nan("");
    return rows;
}

double observed_order(const std::vector<ConvergenceRow>& rows) {
    for (const auto& row : rows)
        if (std::isfinite(row.order)) return row.order;
    return std::nan("");
}

}  // namespace lagflow
