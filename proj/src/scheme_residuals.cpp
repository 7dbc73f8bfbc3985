#include "lagflow/scheme_residuals.hpp"

#include <cmath>

#include "lagflow/schemes.hpp"

namespace lagflow {

namespace {

// (x^{n+1} - 1)/((n+1)(x - 1)) without the removable singularity
double ratio_factor(double x, int n) {
    switch (n) {
        case 0: return 1.0;
        case 1: return 0.5 * (x + 1.0);
        default: return (x * x + x + 1.0) / 3.0;
    }
}

}  // namespace

std::array<double, 4> sp_residuals(const Stencil& st, const GasModel& gas, double alpha) {
    const double g = gas.gamma;
    const double tau = st.tau(), hs = st.hs();
    const double R = r_factor(st.r, st.r_hat, gas.n);
    const double Rp = r_factor(st.r_plus, st.r_hat_plus, gas.n);
    const double u05 = 0.5 * (st.u + st.u_hat);
    const double u05p = 0.5 * (st.u_plus + st.u_hat_plus);
    const double pa = alpha * st.p_hat + (1.0 - alpha) * st.p;
    const double pam = alpha * st.p_hat_minus + (1.0 - alpha) * st.p_minus;

    const double v = 1.0 / st.rho, v_hat = 1.0 / st.rho_hat;
    const double eps = st.p * v / (g - 1.0), eps_hat = st.p_hat * v_hat / (g - 1.0);
    const double width = st.r_plus - st.r;
    const double vscale = std::sqrt(st.p / st.rho);

    double mass = ((v_hat - v) - tau / hs * (Rp * u05p - R * u05)) / v;
    double vel = ((st.u_hat - st.u) + tau / hs * R * (pa - pam)) / vscale;
    double en = ((eps_hat - eps) + pa * tau / hs * (Rp * u05p - R * u05)) / eps;
    double coord = ((st.r_hat - st.r) - tau * u05) / width;
    return {mass, vel, en, coord};
}

std::array<double, 4> explicit_residuals(const Stencil& st, const GasModel& gas) {
    const int np1 = gas.n + 1;
    const double gstar = gas.gamma_star();
    const double tau = st.tau(), hs = st.hs();

    double vol = (std::pow(st.r_plus, np1) - std::pow(st.r, np1));
    double vol_hat = (std::pow(st.r_hat_plus, np1) - std::pow(st.r_hat, np1));
    double mass = (st.rho_hat * vol_hat - st.rho * vol) / (np1 * hs);

    double vscale = std::sqrt(st.p / st.rho);
    double vel = ((st.u_hat - st.u) +
                  tau * std::pow(st.rho_hat / st.rho, 2.0 / np1) * std::pow(st.r, gas.n) *
                      (st.p - st.p_minus) / hs) /
                 vscale;
    double entropy = st.p_hat / st.p * std::pow(st.rho / st.rho_hat, gstar) - 1.0;
    double coord = ((st.r_hat - st.r) - tau * st.u) / (st.r_plus - st.r);
    return {mass, vel, entropy, coord};
}

std::array<double, 4> sp_residuals_invariant_form(const Stencil& st, const GasModel& gas,
                                                  double alpha) {
    const double g = gas.gamma;
    const int n = gas.n;
    if (n == 0) {
        auto I = compute_invariants(st, gas, InvariantSet::lagr_n0_14).values;
        // I: 1 h-/h, 2 tau/h sqrt(rho p), 3..4 mesh-velocity, 5..6 du, 7..8 rho dr,
        //    9..11 rho ratios, 12..14 p ratios
        double f1 = (1.0 / I[9] - 1.0) - I[1] * 0.5 * (I[4] + I[5]);
        double f2 = (I[2] - I[3]) +
                    I[1] * (alpha * (I[12] - I[12] * I[13]) + (1.0 - alpha) * (1.0 - I[11]));
        double f3 = (I[12] / I[9] - 1.0) / (g - 1.0) +
                    I[1] * (alpha * I[12] + (1.0 - alpha)) * 0.5 * (I[4] + I[5]);
        double f4 = I[2] + I[3];
        return {f1, f2, f3, f4};
    }
    auto I = compute_invariants(st, gas, InvariantSet::lagr_general_16).values;
    // numbering of the 16-element basis, zero-based: I[1]=rho r^{n+1}/h,
    // I[2]=tau r^n sqrt(rho p)/h, I[3]=tau u/r, I[4..6] velocity ratios,
    // I[7..9] radius ratios, I[10..12] rho ratios, I[13..15] p ratios
    double W = ratio_factor(I[8], n);                        // R / r^n
    double Wc = ratio_factor(I[8] * I[9] / I[7], n);         // R_+ / r_+^n
    double bracket = std::pow(I[7], n) * Wc * 0.5 * (I[5] * I[6] + I[4]) -
                     W * 0.5 * (I[5] + 1.0);
    double f1 = (1.0 / I[11] - 1.0) - I[1] * I[3] * bracket;
    double f2 = (I[5] - 1.0) + I[2] * I[2] / (I[1] * I[3]) * W *
                                   (alpha * I[14] * (1.0 - I[15]) +
                                    (1.0 - alpha) * (1.0 - I[13]));
    double f3 = (I[14] / I[11] - 1.0) / (g - 1.0) +
                I[1] * I[3] * (alpha * I[14] + (1.0 - alpha)) * bracket;
    double f4 = (I[8] - 1.0) - 0.5 * I[3] * (1.0 + I[5]);
    return {f1, f2, f3, f4};
}

std::array<double, 4> explicit_residuals_invariant_form(const Stencil& st, const GasModel& gas) {
    const int n = gas.n;
    const int np1 = n + 1;
    if (n == 0) {
        auto J = compute_invariants(st, gas, InvariantSet::lagr_n0_g3_13).values;
        double f1 = J[6] - J[7];
        double f2 = J[3] - J[1] * std::pow(J[8], -0.75) * (1.0 - J[11]);
        double f3 = J[8] - 1.0;
        double f4 = J[2];
        return {f1, f2, f3, f4};
    }
    auto J = compute_invariants(st, gas, InvariantSet::lagr_gstar_15).values;
    double f1 = J[2] * (std::pow(J[10], np1) - 1.0) - J[1] * (std::pow(J[9], np1) - 1.0);
    double f2 = (J[7] - 1.0) - J[3] * J[3] / J[1] * (1.0 - J[13]);
    double f3 = J[4] - 1.0;
    double f4 = J[5] - 1.0;
    return {f1, f2, f3, f4};
}

}  // namespace lagflow
