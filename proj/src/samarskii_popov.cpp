#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "lagflow/errors.hpp"
#include "lagflow/schemes.hpp"

namespace lagflow {

double r_factor(double r, double r_hat, int n) {
    switch (n) {
        case 0: return 1.0;
        case 1: return 0.5 * (r_hat + r);
        default: return (r_hat * r_hat + r_hat * r + r * r) / 3.0;
    }
}

double r_factor_d_rhat(double r, double r_hat, int n) {
    switch (n) {
        case 0: return 0.0;
        case 1: return 0.5;
        default: return (2.0 * r_hat + r) / 3.0;
    }
}

namespace {

// Thomas solve of a tridiagonal system; `c` is overwritten.  For the
// periodic variant the cyclic corner entries are folded in by
// Sherman-Morrison.
void solve_tridiag(std::vector<double>& a, std::vector<double>& b, std::vector<double>& c,
                   std::vector<double>& rhs) {
    const int m = static_cast<int>(b.size());
    for (int i = 1; i < m; ++i) {
        double w = a[i] / b[i - 1];
        b[i] -= w * c[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    rhs[m - 1] /= b[m - 1];
    for (int i = m - 2; i >= 0; --i) rhs[i] = (rhs[i] - c[i] * rhs[i + 1]) / b[i];
}

void solve_cyclic(std::vector<double> a, std::vector<double> b, std::vector<double> c,
                  std::vector<double> rhs, std::vector<double>& x) {
    const int m = static_cast<int>(b.size());
    double corner_lo = a[0], corner_hi = c[m - 1];
    double gamma = -b[0];
    std::vector<double> bb = b;
    bb[0] -= gamma;
    bb[m - 1] -= corner_hi * corner_lo / gamma;
    std::vector<double> u(m, 0.0);
    u[0] = gamma;
    u[m - 1] = corner_hi;
    std::vector<double> a1 = a, c1 = c, r1 = rhs, b1 = bb;
    solve_tridiag(a1, b1, c1, r1);
    std::vector<double> a2 = a, c2 = c, b2 = bb, r2 = u;
    solve_tridiag(a2, b2, c2, r2);
    double frac = (r1[0] + corner_lo / gamma * r1[m - 1]) /
                  (1.0 + r2[0] + corner_lo / gamma * r2[m - 1]);
    x.resize(m);
    for (int i = 0; i < m; ++i) x[i] = r1[i] - frac * r2[i];
}

struct LayerEval {
    std::vector<double> r_hat, R, dR;       // nodes
    std::vector<double> v_hat, p_hat, pa;   // cells; pa is the weighted pressure
    std::vector<double> eps_hat;
    // d v_hat / d u_hat at the two bounding nodes
    std::vector<double> dv_dul, dv_dur;
    // d pa / d v_hat and direct d pa / d u_hat contributions (modified EOS)
    std::vector<double> dpa_dv, dpa_dul, dpa_dur;
    bool ok = false;
};

struct Workspace {
    const FlowState& state;
    const MassMesh& mesh;
    const GasModel& gas;
    const SchemeConfig& cfg;
    bool modified;
    int N;
    double tau, hs;

    int node_of_unknown(int k) const { return cfg.bc == Bc::periodic_slab ? k : k + 1; }
    int n_unknowns() const { return cfg.bc == Bc::periodic_slab ? N : N - 1; }

    double u_hat_at(const std::vector<double>& x, int node) const {
        if (cfg.bc == Bc::periodic_slab) return x[node % N];
        if (node == 0 || node == N) return 0.0;
        return x[node - 1];
    }

    // Evaluates the eliminated variables and the weighted pressures for a
    // velocity iterate x.
    LayerEval evaluate(const std::vector<double>& x) const {
        const double g = gas.gamma;
        const double alpha = modified ? 0.5 : cfg.alpha;
        LayerEval e;
        e.r_hat.resize(N + 1);
        e.R.resize(N + 1);
        e.dR.resize(N + 1);
        for (int i = 0; i <= N; ++i) {
            double u05 = 0.5 * (u_hat_at(x, i) + state.u[i]);
            e.r_hat[i] = state.r[i] + tau * u05;
            e.R[i] = r_factor(state.r[i], e.r_hat[i], gas.n);
            e.dR[i] = r_factor_d_rhat(state.r[i], e.r_hat[i], gas.n) * 0.5 * tau;
        }
        e.v_hat.resize(N);
        e.p_hat.resize(N);
        e.pa.resize(N);
        e.eps_hat.resize(N);
        e.dv_dul.resize(N);
        e.dv_dur.resize(N);
        e.dpa_dv.resize(N);
        e.dpa_dul.assign(N, 0.0);
        e.dpa_dur.assign(N, 0.0);

        for (int c = 0; c < N; ++c) {
            int il = c, ir = c + 1;
            double u05l = 0.5 * (u_hat_at(x, il) + state.u[il]);
            double u05r = 0.5 * (u_hat_at(x, ir) + state.u[ir]);
            double v = 1.0 / state.rho[c];
            double dv = tau / hs * (e.R[ir] * u05r - e.R[il] * u05l);
            double v_hat = v + dv;
            if (!(v_hat > 0.0)) return e;
            e.v_hat[c] = v_hat;
            e.dv_dul[c] = -tau / hs * (e.dR[il] * u05l + 0.5 * e.R[il]);
            e.dv_dur[c] = tau / hs * (e.dR[ir] * u05r + 0.5 * e.R[ir]);

            if (!modified) {
                // pointwise polytropic closure
                double num = state.eps[c] - (1.0 - alpha) * state.p[c] * dv;
                double den = v_hat / (g - 1.0) + alpha * dv;
                if (!(den > 0.0)) return e;
                double p_hat = num / den;
                if (!(p_hat > 0.0)) return e;
                e.p_hat[c] = p_hat;
                e.pa[c] = alpha * p_hat + (1.0 - alpha) * state.p[c];
                e.dpa_dv[c] =
                    alpha * (-(1.0 - alpha) * state.p[c] * den - num * (1.0 / (g - 1.0) + alpha)) /
                    (den * den);
                e.eps_hat[c] = state.eps[c] - e.pa[c] * dv;
            } else {
                // two-layer closure with the tau^2/8 <u_t^2> and geometry terms
                double utl = (u_hat_at(x, il) - state.u[il]) / tau;
                double utr = (u_hat_at(x, ir) - state.u[ir]) / tau;
                double num = state.eps[c] + tau * tau / 16.0 * (utl * utl + utr * utr);

                auto geom = [&](int i) {
                    double r05 = 0.5 * (state.r[i] + e.r_hat[i]);
                    double rp = std::pow(state.r[i], gas.n + 1);
                    double rph = std::pow(e.r_hat[i], gas.n + 1);
                    return r05 * e.R[i] - 0.5 * (rp + rph);
                };
                auto dgeom_drhat = [&](int i) {
                    double r05 = 0.5 * (state.r[i] + e.r_hat[i]);
                    return 0.5 * e.R[i] + r05 * r_factor_d_rhat(state.r[i], e.r_hat[i], gas.n) -
                           0.5 * (gas.n + 1) * std::pow(e.r_hat[i], gas.n);
                };
                double K = (geom(ir) - geom(il)) / hs;
                double v05 = 0.5 * (v + v_hat);
                double den = v05 / (g - 1.0) + 0.5 * K + 0.5 * dv;
                if (!(den > 0.0)) return e;
                double pa = num / den;  // p^{(1/2)}
                if (!(pa > 0.0)) return e;
                e.pa[c] = pa;
                e.p_hat[c] = 2.0 * pa - state.p[c];
                if (!(e.p_hat[c] > 0.0)) return e;
                e.eps_hat[c] = state.eps[c] - pa * dv;

                double dden_dv = 0.5 / (g - 1.0) + 0.5;
                e.dpa_dv[c] = -num * dden_dv / (den * den);
                // direct velocity dependence via <u_t^2> and the geometry term
                double dnum_dul = tau / 8.0 * utl;
                double dnum_dur = tau / 8.0 * utr;
                double dK_dul = -dgeom_drhat(il) * 0.5 * tau / hs;
                double dK_dur = dgeom_drhat(ir) * 0.5 * tau / hs;
                e.dpa_dul[c] = (dnum_dul * den - num * 0.5 * dK_dul) / (den * den);
                e.dpa_dur[c] = (dnum_dur * den - num * 0.5 * dK_dur) / (den * den);
            }
        }
        e.ok = true;
        return e;
    }

    double ghost_pa(const LayerEval& e, int cell) const {
        // mirrored pressure ghost cells
        if (cell < 0) return e.pa[0];
        if (cell >= N) return e.pa[N - 1];
        return e.pa[cell];
    }

    // G_k = (u_hat - u)/tau + R (pa - pa_-)/hs at the node of unknown k
    void residual(const std::vector<double>& x, const LayerEval& e, std::vector<double>& G) const {
        const int m = n_unknowns();
        G.resize(m);
        for (int k = 0; k < m; ++k) {
            int i = node_of_unknown(k);
            double pr, pl;
            if (cfg.bc == Bc::periodic_slab) {
                pr = e.pa[i % N];
                pl = e.pa[(i - 1 + N) % N];
            } else {
                pr = e.pa[i];
                pl = e.pa[i - 1];
            }
            G[k] = (x[k] - state.u[i]) / tau + e.R[i] * (pr - pl) / hs;
        }
    }
};

std::pair<FlowState, StepReport> sp_step_impl(const FlowState& state, const MassMesh& mesh,
                                              const GasModel& gas, const SchemeConfig& cfg,
                                              bool modified) {
    cfg.validate();
    state.validate(gas);
    if (!(mesh.tau > 0.0)) throw std::invalid_argument("sp_step: mesh.tau must be set > 0");
    if (modified && !gas.is_gamma_star())
        throw applicability_error("sp_step_modified requires gamma = (n+3)/(n+1)");
    if (cfg.bc == Bc::periodic_slab && gas.n != 0)
        throw applicability_error("periodic-slab boundary requires n = 0");

    Workspace w{state, mesh, gas, cfg, modified, state.n_cells(), mesh.tau, mesh.hs};
    const int m = w.n_unknowns();
    const int N = w.N;

    std::vector<double> x(m);
    for (int k = 0; k < m; ++k) x[k] = state.u[w.node_of_unknown(k)];

    StepReport rep;
    rep.tau = mesh.tau;

    LayerEval e = w.evaluate(x);
    std::vector<double> G;
    if (e.ok) w.residual(x, e, G);
    auto norm_inf = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double q : v) s = std::max(s, std::abs(q));
        return s;
    };
    double gn = e.ok ? norm_inf(G) : std::numeric_limits<double>::infinity();

    int failed_searches = 0;
    for (int it = 0; it < cfg.newton_max_iter && e.ok; ++it) {
        rep.iterations = it;
        if (gn <= cfg.newton_tol) break;

        // assemble the tridiagonal Jacobian dG_k/dx_j
        std::vector<double> lo(m, 0.0), di(m, 0.0), up(m, 0.0);
        for (int k = 0; k < m; ++k) {
            int i = w.node_of_unknown(k);
            int cr = (cfg.bc == Bc::periodic_slab) ? i % N : i;
            int cl = (cfg.bc == Bc::periodic_slab) ? (i - 1 + N) % N : i - 1;
            double pr = e.pa[cr], pl = e.pa[cl];

            di[k] = 1.0 / w.tau + e.dR[i] * (pr - pl) / w.hs;
            // right cell cr has nodes (i, i+1); left cell cl has nodes (i-1, i)
            double dpr_di = e.dpa_dv[cr] * e.dv_dul[cr] + e.dpa_dul[cr];
            double dpr_dnext = e.dpa_dv[cr] * e.dv_dur[cr] + e.dpa_dur[cr];
            double dpl_di = e.dpa_dv[cl] * e.dv_dur[cl] + e.dpa_dur[cl];
            double dpl_dprev = e.dpa_dv[cl] * e.dv_dul[cl] + e.dpa_dul[cl];

            di[k] += e.R[i] * (dpr_di - dpl_di) / w.hs;
            double up_val = e.R[i] * dpr_dnext / w.hs;
            double lo_val = -e.R[i] * dpl_dprev / w.hs;
            if (cfg.bc == Bc::periodic_slab) {
                up[k] = up_val;
                lo[k] = lo_val;
            } else {
                // clamp couplings to pinned boundary nodes
                if (i + 1 <= N - 1) up[k] = up_val;
                if (i - 1 >= 1) lo[k] = lo_val;
            }
        }

        std::vector<double> delta;
        std::vector<double> rhs(m);
        for (int k = 0; k < m; ++k) rhs[k] = -G[k];
        if (cfg.bc == Bc::periodic_slab) {
            solve_cyclic(lo, di, up, rhs, delta);
        } else {
            solve_tridiag(lo, di, up, rhs);
            delta = rhs;
        }

        // damped update
        double lambda = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 30; ++ls) {
            std::vector<double> xt(m);
            for (int k = 0; k < m; ++k) xt[k] = x[k] + lambda * delta[k];
            LayerEval et = w.evaluate(xt);
            if (et.ok) {
                std::vector<double> Gt;
                w.residual(xt, et, Gt);
                double gt = norm_inf(Gt);
                if (gt < gn || gt <= cfg.newton_tol) {
                    x = std::move(xt);
                    e = std::move(et);
                    G = std::move(Gt);
                    gn = gt;
                    accepted = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        if (!accepted) {
            if (++failed_searches >= 3) break;
            // fixed-point sweep with frozen pressures
            std::vector<double> xt(m);
            for (int k = 0; k < m; ++k) {
                int i = w.node_of_unknown(k);
                int cr = (cfg.bc == Bc::periodic_slab) ? i % N : i;
                int cl = (cfg.bc == Bc::periodic_slab) ? (i - 1 + N) % N : i - 1;
                xt[k] = state.u[i] - w.tau * e.R[i] * (e.pa[cr] - e.pa[cl]) / w.hs;
            }
            LayerEval et = w.evaluate(xt);
            if (!et.ok) break;
            x = std::move(xt);
            e = std::move(et);
            w.residual(x, e, G);
            gn = norm_inf(G);
        }
    }

    rep.residual = gn;
    rep.converged = e.ok && gn <= cfg.newton_tol;
    if (!rep.converged) return {state, rep};

    FlowState out;
    out.r.resize(N + 1);
    out.u.resize(N + 1);
    out.rho.resize(N);
    out.p.resize(N);
    out.eps.resize(N);
    for (int i = 0; i <= N; ++i) {
        out.u[i] = w.u_hat_at(x, i);
        out.r[i] = e.r_hat[i];
    }
    for (int c = 0; c < N; ++c) {
        out.rho[c] = 1.0 / e.v_hat[c];
        out.p[c] = e.p_hat[c];
        out.eps[c] = e.eps_hat[c];
    }
    return {out, rep};
}

}  // namespace

std::pair<FlowState, StepReport> sp_step(const FlowState& state, const MassMesh& mesh,
                                         const GasModel& gas, const SchemeConfig& cfg) {
    return sp_step_impl(state, mesh, gas, cfg, false);
}

std::pair<FlowState, StepReport> sp_step_modified(const FlowState& state, const MassMesh& mesh,
                                                  const GasModel& gas, const SchemeConfig& cfg) {
    return sp_step_impl(state, mesh, gas, cfg, true);
}

double cfl_timestep(const FlowState& state, const MassMesh& mesh, const GasModel& gas,
                    const SchemeConfig& cfg) {
    const int N = state.n_cells();
    double tau = std::numeric_limits<double>::infinity();
    for (int c = 0; c < N; ++c) {
        double rbar = 0.5 * (state.r[c] + state.r[c + 1]);
        double cs = sound_speed(state.rho[c], state.p[c], gas);
        double speed = std::pow(rbar, gas.n) * state.rho[c] * cs;
        if (speed > 0.0) tau = std::min(tau, mesh.hs / speed);
    }
    tau *= cfg.cfl_safety;
    if (mesh.tau > 0.0) tau = std::min(tau, cfg.tau_max_factor * mesh.tau);
    return tau;
}

}  // namespace lagflow
