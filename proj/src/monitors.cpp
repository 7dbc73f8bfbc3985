#include "lagflow/monitors.hpp"

#include <algorithm>
#include <cmath>

#include "lagflow/errors.hpp"
#include "lagflow/schemes.hpp"

namespace lagflow {

const char* discrete_law_name(DiscreteLaw law) {
    switch (law) {
        case DiscreteLaw::mass: return "mass";
        case DiscreteLaw::energy: return "energy";
        case DiscreteLaw::momentum_n0: return "momentum";
        case DiscreteLaw::center_of_mass_n0: return "center-of-mass";
        case DiscreteLaw::additional_1: return "additional-1";
        case DiscreteLaw::additional_2: return "additional-2";
        case DiscreteLaw::mass_explicit: return "mass-explicit";
        case DiscreteLaw::entropy_pathline: return "entropy-pathline";
    }
    return "?";
}

bool discrete_law_applicable(DiscreteLaw law, SchemeKind scheme, const GasModel& gas) {
    const bool implicit = scheme == SchemeKind::sp || scheme == SchemeKind::sp_modified;
    switch (law) {
        case DiscreteLaw::mass:
        case DiscreteLaw::energy:
            return implicit;
        case DiscreteLaw::momentum_n0:
        case DiscreteLaw::center_of_mass_n0:
            return implicit && gas.n == 0;
        case DiscreteLaw::additional_1:
        case DiscreteLaw::additional_2:
            return scheme == SchemeKind::sp_modified && gas.is_gamma_star();
        case DiscreteLaw::mass_explicit:
        case DiscreteLaw::entropy_pathline:
            return scheme == SchemeKind::explicit_invariant && gas.is_gamma_star();
    }
    return false;
}

namespace {

struct LawContext {
    const FlowState& a;  // old layer
    const FlowState& b;  // new layer
    const MassMesh& mesh;
    const GasModel& gas;
    double alpha;
    double t, tau;
    int N;
    bool periodic;

    double R(int i) const { return r_factor(a.r[i], b.r[i], gas.n); }
    double u05(int i) const { return 0.5 * (a.u[i] + b.u[i]); }
    double r05(int i) const { return 0.5 * (a.r[i] + b.r[i]); }
    double pa(int c) const {
        // mirrored ghost cells at walls, wrapped cells on the periodic slab
        int cc = periodic ? (c % N + N) % N : std::clamp(c, 0, N - 1);
        return alpha * b.p[cc] + (1.0 - alpha) * a.p[cc];
    }
    double pstar(int i) const { return 0.5 * (pa(i - 1) + pa(i)); }
    double t05() const { return t + 0.5 * tau; }
    double t2_05() const { return 0.5 * (t * t + (t + tau) * (t + tau)); }
};

double mean_sq_u(const FlowState& s, int c) {
    return 0.5 * (s.u[c] * s.u[c] + s.u[c + 1] * s.u[c + 1]);
}
double mean_ru(const FlowState& s, int c) {
    return 0.5 * (s.r[c] * s.u[c] + s.r[c + 1] * s.u[c + 1]);
}
double mean_sq_r(const FlowState& s, int c) {
    return 0.5 * (s.r[c] * s.r[c] + s.r[c + 1] * s.r[c + 1]);
}

}  // namespace

StepLawEval discrete_law_eval(DiscreteLaw law, const FlowState& a, const FlowState& b,
                              const MassMesh& mesh, const GasModel& gas,
                              const SchemeConfig& cfg, double t_old, double tau,
                              SchemeKind scheme) {
    if (!discrete_law_applicable(law, scheme, gas))
        throw applicability_error(std::string("discrete law ") + discrete_law_name(law) +
                                  " not applicable to this scheme/gas");
    const int N = a.n_cells();
    const double hs = mesh.hs;
    double alpha = scheme == SchemeKind::sp_modified ? 0.5 : cfg.alpha;
    LawContext cx{a, b, mesh, gas, alpha, t_old, tau, N, cfg.bc == Bc::periodic_slab};
    const double t_new = t_old + tau;

    StepLawEval ev;
    auto cell_layer_totals = [&](auto&& density) {
        ev.total_old = ev.total_new = 0.0;
        for (int c = 0; c < N; ++c) {
            ev.total_old += density(a, t_old, c) * hs;
            ev.total_new += density(b, t_new, c) * hs;
        }
    };

    switch (law) {
        case DiscreteLaw::mass: {
            ev.residual.resize(N);
            for (int c = 0; c < N; ++c)
                ev.residual[c] = (1.0 / b.rho[c] - 1.0 / a.rho[c]) / tau -
                                 (cx.R(c + 1) * cx.u05(c + 1) - cx.R(c) * cx.u05(c)) / hs;
            cell_layer_totals([](const FlowState& s, double, int c) { return 1.0 / s.rho[c]; });
            ev.flux_left = -cx.R(0) * cx.u05(0);
            ev.flux_right = -cx.R(N) * cx.u05(N);
            break;
        }
        case DiscreteLaw::mass_explicit: {
            ev.residual.resize(N);
            for (int c = 0; c < N; ++c)
                ev.residual[c] = (1.0 / b.rho[c] - 1.0 / a.rho[c]) / tau -
                                 (cx.R(c + 1) * a.u[c + 1] - cx.R(c) * a.u[c]) / hs;
            cell_layer_totals([](const FlowState& s, double, int c) { return 1.0 / s.rho[c]; });
            ev.flux_left = -cx.R(0) * a.u[0];
            ev.flux_right = -cx.R(N) * a.u[N];
            break;
        }
        case DiscreteLaw::energy: {
            ev.residual.resize(N);
            auto dens = [](const FlowState& s, double, int c) {
                return s.eps[c] + 0.25 * (s.u[c] * s.u[c] + s.u[c + 1] * s.u[c + 1]);
            };
            for (int c = 0; c < N; ++c)
                ev.residual[c] =
                    (dens(b, 0, c) - dens(a, 0, c)) / tau +
                    (cx.R(c + 1) * cx.pstar(c + 1) * cx.u05(c + 1) -
                     cx.R(c) * cx.pstar(c) * cx.u05(c)) / hs;
            cell_layer_totals(dens);
            ev.flux_left = cx.R(0) * cx.pstar(0) * cx.u05(0);
            ev.flux_right = cx.R(N) * cx.pstar(N) * cx.u05(N);
            break;
        }
        case DiscreteLaw::momentum_n0: {
            ev.residual.resize(N + 1);
            for (int i = 0; i <= N; ++i)
                ev.residual[i] = (b.u[i] - a.u[i]) / tau + (cx.pa(i) - cx.pa(i - 1)) / hs;
            ev.total_old = ev.total_new = 0.0;
            for (int i = 0; i <= N; ++i) {
                ev.total_old += a.u[i] * hs;
                ev.total_new += b.u[i] * hs;
            }
            ev.flux_left = cx.pa(-1);
            ev.flux_right = cx.pa(N);
            break;
        }
        case DiscreteLaw::center_of_mass_n0: {
            ev.residual.resize(N + 1);
            for (int i = 0; i <= N; ++i)
                ev.residual[i] = ((b.r[i] - t_new * b.u[i]) - (a.r[i] - t_old * a.u[i])) / tau -
                                 cx.t05() * (cx.pa(i) - cx.pa(i - 1)) / hs;
            ev.total_old = ev.total_new = 0.0;
            for (int i = 0; i <= N; ++i) {
                ev.total_old += (a.r[i] - t_old * a.u[i]) * hs;
                ev.total_new += (b.r[i] - t_new * b.u[i]) * hs;
            }
            ev.flux_left = -cx.t05() * cx.pa(-1);
            ev.flux_right = -cx.t05() * cx.pa(N);
            break;
        }
        case DiscreteLaw::additional_1: {
            ev.residual.resize(N);
            auto dens = [](const FlowState& s, double t, int c) {
                return 2.0 * t * (s.eps[c] + 0.5 * mean_sq_u(s, c)) - mean_ru(s, c);
            };
            auto flux = [&](int i) {
                return cx.R(i) * cx.pstar(i) * (2.0 * cx.t05() * cx.u05(i) - cx.r05(i));
            };
            for (int c = 0; c < N; ++c)
                ev.residual[c] = (dens(b, t_new, c) - dens(a, t_old, c)) / tau +
                                 (flux(c + 1) - flux(c)) / hs;
            cell_layer_totals(dens);
            ev.flux_left = flux(0);
            ev.flux_right = flux(N);
            break;
        }
        case DiscreteLaw::additional_2: {
            ev.residual.resize(N);
            double corr = tau * tau / 8.0;
            auto dens = [&](const FlowState& s, double t, int c) {
                return t * t * (s.eps[c] + 0.5 * mean_sq_u(s, c)) - t * mean_ru(s, c) +
                       0.5 * mean_sq_r(s, c) + corr * mean_sq_u(s, c);
            };
            auto flux = [&](int i) {
                return cx.R(i) * cx.pstar(i) * (cx.t2_05() * cx.u05(i) - cx.t05() * cx.r05(i));
            };
            for (int c = 0; c < N; ++c)
                ev.residual[c] = (dens(b, t_new, c) - dens(a, t_old, c)) / tau +
                                 (flux(c + 1) - flux(c)) / hs;
            cell_layer_totals(dens);
            ev.flux_left = flux(0);
            ev.flux_right = flux(N);
            break;
        }
        case DiscreteLaw::entropy_pathline: {
            ev.residual.resize(N);
            for (int c = 0; c < N; ++c)
                ev.residual[c] = (entropy_variable(b.rho[c], b.p[c], gas) -
                                  entropy_variable(a.rho[c], a.p[c], gas)) / tau;
            cell_layer_totals([&](const FlowState& s, double, int c) {
                return entropy_variable(s.rho[c], s.p[c], gas);
            });
            ev.flux_left = ev.flux_right = 0.0;
            break;
        }
    }
    return ev;
}

Eigen::ArrayXd discrete_cl_residual(DiscreteLaw law, const FlowState& a, const FlowState& b,
                                    const MassMesh& mesh, const GasModel& gas,
                                    const SchemeConfig& cfg, double t_old, double tau,
                                    SchemeKind scheme) {
    return discrete_law_eval(law, a, b, mesh, gas, cfg, t_old, tau, scheme).residual;
}

std::pair<Eigen::ArrayXd, Eigen::ArrayXd> entropy_work_relations(const FlowState& a,
                                                                 const FlowState& b,
                                                                 const SchemeConfig& cfg,
                                                                 const GasModel& gas) {
    const int N = a.n_cells();
    Eigen::ArrayXd entropy_res(N), work_res(N);
    for (int c = 0; c < N; ++c) {
        double pa = cfg.alpha * b.p[c] + (1.0 - cfg.alpha) * a.p[c];
        double ra = cfg.alpha * b.rho[c] + (1.0 - cfg.alpha) * a.rho[c];
        entropy_res[c] = (b.p[c] - a.p[c]) / pa - gas.gamma * (b.rho[c] - a.rho[c]) / ra;
        work_res[c] = (b.eps[c] - a.eps[c]) + pa * (1.0 / b.rho[c] - 1.0 / a.rho[c]);
    }
    return {entropy_res, work_res};
}

void MonitorSeries::record_step(const FlowState& a, const FlowState& b, const MassMesh& mesh,
                                const GasModel& gas, const SchemeConfig& cfg, double t_old,
                                double tau) {
    StepLawEval ev = discrete_law_eval(law_, a, b, mesh, gas, cfg, t_old, tau, scheme_);
    if (!started_) {
        started_ = true;
        total0_ = ev.total_old;
    }
    total_ = ev.total_new;
    flux_integral_ += tau * (ev.flux_right - ev.flux_left);
    defect_sum_ += ev.total_new - ev.total_old + tau * (ev.flux_right - ev.flux_left);
    max_residual_ = std::max(max_residual_, ev.residual.abs().maxCoeff());
}

double MonitorSeries::drift() const {
    return std::abs(defect_sum_) / std::max(std::abs(total0_), 1.0);
}

}  // namespace lagflow
