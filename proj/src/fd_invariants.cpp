#include "lagflow/fd_invariants.hpp"

#include <cmath>

#include "lagflow/errors.hpp"

namespace lagflow {

const char* invariant_set_name(InvariantSet set) {
    switch (set) {
        case InvariantSet::euler_12: return "euler-12";
        case InvariantSet::lagr_general_16: return "lagrangian-general-16";
        case InvariantSet::lagr_n0_14: return "lagrangian-n0-14";
        case InvariantSet::lagr_gstar_15: return "lagrangian-gstar-15";
        case InvariantSet::lagr_n0_g3_13: return "lagrangian-n0-gamma3-13";
    }
    return "?";
}

int invariant_set_size(InvariantSet set) {
    switch (set) {
        case InvariantSet::euler_12: return 12;
        case InvariantSet::lagr_general_16: return 16;
        case InvariantSet::lagr_n0_14: return 14;
        case InvariantSet::lagr_gstar_15: return 15;
        case InvariantSet::lagr_n0_g3_13: return 13;
    }
    return 0;
}

bool invariant_set_applicable(InvariantSet set, const GasModel& gas) {
    switch (set) {
        case InvariantSet::euler_12: return gas.n == 0;
        case InvariantSet::lagr_general_16: return true;
        case InvariantSet::lagr_n0_14: return gas.n == 0;
        case InvariantSet::lagr_gstar_15: return gas.n != 0 && gas.is_gamma_star();
        case InvariantSet::lagr_n0_g3_13: return gas.n == 0 && gas.is_gamma_star();
    }
    return false;
}

namespace {

struct Guard {
    bool degenerate = false;
    double ratio(double num, double den) {
        if (std::abs(num) < 1e-300 && std::abs(den) < 1e-300) {
            degenerate = true;
            return 1.0;
        }
        return num / den;
    }
};

}  // namespace

InvariantVector compute_invariants(const Stencil& st, const GasModel& gas, InvariantSet set) {
    if (!invariant_set_applicable(set, gas))
        throw applicability_error(std::string("invariant set ") + invariant_set_name(set) +
                                  " not applicable to this (n, gamma)");
    st.validate();

    const double tau = st.tau(), hs = st.hs();
    const int n = gas.n;
    Guard gu;
    InvariantVector out;
    out.set_id = set;
    auto& I = out.values;

    switch (set) {
        case InvariantSet::euler_12: {
            double h_plus = st.r_plus - st.r;
            double h_hat_plus = st.r_hat_plus - st.r_hat;
            I = {
                gu.ratio(h_hat_plus, h_plus),
                tau / h_plus * std::sqrt(st.p / st.rho),
                std::sqrt(st.rho / st.p) * ((st.r_hat - st.r) / tau - st.u),
                std::sqrt(st.rho / st.p) * (st.u_plus - st.u),
                std::sqrt(st.rho / st.p) * (st.u_hat - st.u),
                std::sqrt(st.rho / st.p) * (st.u_hat_plus - st.u_hat),
                st.p_minus / st.p,
                st.p_hat / st.p,
                st.p_hat_minus / st.p_hat,
                st.rho_hat / st.rho,
                st.rho_hat_minus / st.rho_hat,
                st.rho_minus / st.rho_hat,
            };
            break;
        }
        case InvariantSet::lagr_general_16: {
            I = {
                st.hs_minus() / hs,
                st.rho * std::pow(st.r, n + 1) / hs,
                tau / hs * std::pow(st.r, n) * std::sqrt(st.rho * st.p),
                tau * st.u / st.r,
                gu.ratio(st.u_plus, st.u),
                gu.ratio(st.u_hat, st.u),
                gu.ratio(st.u_hat_plus, st.u_hat),
                st.r_plus / st.r,
                st.r_hat / st.r,
                st.r_hat_plus / st.r_hat,
                st.rho_minus / st.rho,
                st.rho_hat / st.rho,
                st.rho_hat_minus / st.rho_hat,
                st.p_minus / st.p,
                st.p_hat / st.p,
                st.p_hat_minus / st.p_hat,
            };
            break;
        }
        case InvariantSet::lagr_n0_14: {
            I = {
                st.hs_minus() / hs,
                tau / hs * std::sqrt(st.rho * st.p),
                std::sqrt(st.rho / st.p) * ((st.r_hat - st.r) / tau - st.u),
                std::sqrt(st.rho / st.p) * ((st.r_hat - st.r) / tau - st.u_hat),
                std::sqrt(st.rho / st.p) * (st.u_plus - st.u),
                std::sqrt(st.rho / st.p) * (st.u_hat_plus - st.u_hat),
                st.rho * (st.r_plus - st.r) / hs,
                st.rho_hat * (st.r_hat_plus - st.r_hat) / hs,
                st.rho_minus / st.rho,
                st.rho_hat / st.rho,
                st.rho_hat_minus / st.rho_hat,
                st.p_minus / st.p,
                st.p_hat / st.p,
                st.p_hat_minus / st.p_hat,
            };
            break;
        }
        case InvariantSet::lagr_gstar_15: {
            double gstar = gas.gamma_star();
            I = {
                st.hs_minus() / hs,
                st.rho * std::pow(st.r, n + 1) / hs,
                st.rho_hat * std::pow(st.r_hat, n + 1) / hs,
                tau * std::pow(st.r, n) / hs * std::pow(st.rho, 0.5 - 1.0 / (n + 1)) *
                    std::pow(st.rho_hat, 1.0 / (n + 1)) * std::sqrt(st.p),
                st.p_hat / st.p * std::pow(st.rho / st.rho_hat, gstar),
                (st.r + tau * st.u) / st.r_hat,
                (st.r_plus + tau * st.u_plus) / st.r_hat_plus,
                (st.r_hat - tau * st.u_hat) / st.r,
                (st.r_hat_plus - tau * st.u_hat_plus) / st.r_plus,
                st.r_plus / st.r,
                st.r_hat_plus / st.r_hat,
                st.rho_minus / st.rho,
                st.rho_hat_minus / st.rho_hat,
                st.p_minus / st.p,
                st.p_hat_minus / st.p_hat,
            };
            break;
        }
        case InvariantSet::lagr_n0_g3_13: {
            double h_plus = st.r_plus - st.r;
            double h_hat_plus = st.r_hat_plus - st.r_hat;
            I = {
                st.hs_minus() / hs,
                tau / hs * std::pow(st.rho * st.p * st.rho_hat * st.p_hat, 0.25),
                std::sqrt(st.rho / st.p) * ((st.r_hat - st.r) / tau - st.u),
                std::sqrt(st.rho_hat / st.p_hat) * ((st.r_hat - st.r) / tau - st.u_hat),
                std::sqrt(st.rho / st.p) * (h_plus / tau + st.u_plus - st.u),
                std::sqrt(st.rho_hat / st.p_hat) * (-h_hat_plus / tau + st.u_hat_plus - st.u_hat),
                st.rho * h_plus / hs,
                st.rho_hat * h_hat_plus / hs,
                st.p_hat / st.p * std::pow(st.rho / st.rho_hat, 3),
                st.rho_minus / st.rho,
                st.rho_hat_minus / st.rho_hat,
                st.p_minus / st.p,
                st.p_hat_minus / st.p_hat,
            };
            break;
        }
    }
    out.degenerate = gu.degenerate;
    return out;
}

Stencil make_stencil(const FlowState& a, const FlowState& b, const MassMesh& mesh, double t_old,
                     double tau, int i) {
    const int N = a.n_cells();
    if (i < 1 || i > N - 1) throw std::out_of_range("make_stencil: need an interior node");
    Stencil st;
    st.t = t_old;
    st.t_hat = t_old + tau;
    st.s = mesh.s[i];
    st.s_plus = mesh.s[i + 1];
    st.s_minus = mesh.s[i - 1];
    st.u = a.u[i];
    st.u_plus = a.u[i + 1];
    st.u_hat = b.u[i];
    st.u_hat_plus = b.u[i + 1];
    st.r = a.r[i];
    st.r_plus = a.r[i + 1];
    st.r_hat = b.r[i];
    st.r_hat_plus = b.r[i + 1];
    st.rho = a.rho[i];
    st.rho_minus = a.rho[i - 1];
    st.rho_hat = b.rho[i];
    st.rho_hat_minus = b.rho[i - 1];
    st.p = a.p[i];
    st.p_minus = a.p[i - 1];
    st.p_hat = b.p[i];
    st.p_hat_minus = b.p[i - 1];
    return st;
}

}  // namespace lagflow
