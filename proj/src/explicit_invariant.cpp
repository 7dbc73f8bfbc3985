#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lagflow/errors.hpp"
#include "lagflow/schemes.hpp"

namespace lagflow {

FlowState explicit_invariant_step(const FlowState& state, const MassMesh& mesh,
                                  const GasModel& gas, const SchemeConfig& cfg) {
    cfg.validate();
    if (!gas.is_gamma_star())
        throw applicability_error("explicit_invariant_step requires gamma = (n+3)/(n+1)");
    if (cfg.bc == Bc::periodic_slab && gas.n != 0)
        throw applicability_error("periodic-slab boundary requires n = 0");
    if (!(mesh.tau > 0.0))
        throw std::invalid_argument("explicit_invariant_step: mesh.tau must be set > 0");

    const int N = state.n_cells();
    const int np1 = gas.n + 1;
    const double gstar = gas.gamma_star();
    const double tau = mesh.tau, hs = mesh.hs;
    const bool periodic = cfg.bc == Bc::periodic_slab;

    FlowState out;
    out.r.resize(N + 1);
    out.u.resize(N + 1);
    out.rho.resize(N);
    out.p.resize(N);
    out.eps.resize(N);

    for (int i = 0; i <= N; ++i) out.r[i] = state.r[i] + tau * state.u[i];
    for (int i = 0; i < N; ++i)
        if (!(out.r[i + 1] > out.r[i]))
            throw std::runtime_error("explicit_invariant_step: mesh tangled (r not monotone)");

    for (int c = 0; c < N; ++c) {
        double vol_old = std::pow(state.r[c + 1], np1) - std::pow(state.r[c], np1);
        double vol_new = std::pow(out.r[c + 1], np1) - std::pow(out.r[c], np1);
        out.rho[c] = state.rho[c] * vol_old / vol_new;
        // p_hat / rho_hat^{gamma*} = p / rho^{gamma*}, arranged so both sides
        // round through the same pow expressions step after step
        double S = state.p[c] / std::pow(state.rho[c], gstar);
        out.p[c] = S * std::pow(out.rho[c], gstar);
        out.eps[c] = specific_internal_energy(out.rho[c], out.p[c], gas);
    }

    auto cell_p = [&](int c) {
        if (periodic) return state.p[(c % N + N) % N];
        if (c < 0) return state.p[0];
        if (c >= N) return state.p[N - 1];
        return state.p[c];
    };
    auto cell_rho_ratio = [&](int c) {
        int cc = periodic ? (c % N + N) % N : std::clamp(c, 0, N - 1);
        return out.rho[cc] / state.rho[cc];
    };

    for (int i = 0; i <= N; ++i) {
        bool pinned = !periodic && (i == 0 || i == N);
        if (pinned) {
            out.u[i] = state.u[i];
            continue;
        }
        double grad = (cell_p(i) - cell_p(i - 1)) / hs;
        out.u[i] = state.u[i] - tau * std::pow(cell_rho_ratio(i), 2.0 / np1) *
                                    std::pow(state.r[i], gas.n) * grad;
    }
    if (periodic) out.u[N] = out.u[0];

    out.validate(gas);
    return out;
}

}  // namespace lagflow
