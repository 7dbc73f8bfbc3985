#include "lagflow/smooth_field.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace lagflow {

double euler_lagrange_residual(const FieldJet& j, double S, double dS, const GasModel& gas) {
    if (!(j.phi_s > 0.0))
        throw std::domain_error("euler_lagrange_residual: phi_s must be > 0 (positive density)");
    if (gas.n >= 1 && !(j.phi > 0.0))
        throw std::domain_error("euler_lagrange_residual: phi must be > 0 for n >= 1");
    const double g = gas.gamma;
    double geom = (gas.n == 0) ? 1.0 : std::pow(j.phi, gas.n * (1.0 - g));
    return j.phi_tt + geom * std::pow(j.phi_s, -g) *
                          (dS - gas.n * g * S * j.phi_s / j.phi - g * S * j.phi_ss / j.phi_s);
}

double euler_lagrange_residual(const SmoothField& field, const GasModel& gas,
                               const EntropyProfile& profile, double t, double s) {
    FieldJet j = field.jet(t, s);
    auto [S, dS] = profile.eval(s);
    return euler_lagrange_residual(j, S, dS, gas);
}

SmoothField random_test_field(unsigned seed, double t_lo, double t_hi, double s_lo,
                              double s_hi) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double c0 = 1.0 + 0.5 * unit(rng);
    double c1 = 0.8 + 0.4 * unit(rng);
    double a = 0.05 + 0.10 * unit(rng);
    double wt = 0.5 + 1.5 * unit(rng);
    double ws = 0.5 + 1.5 * unit(rng);
    double ph = 6.283185307179586 * unit(rng);
    double b = 0.05 + 0.10 * unit(rng);
    double vt = 0.5 + 1.5 * unit(rng);

    SmoothField f;
    f.t_lo = t_lo;
    f.t_hi = t_hi;
    f.s_lo = s_lo;
    f.s_hi = s_hi;
    f.jet = [=](double t, double s) {
        FieldJet j;
        double A = std::sin(wt * t + ws * s + ph);
        double At = wt * std::cos(wt * t + ws * s + ph);
        double As = ws * std::cos(wt * t + ws * s + ph);
        double Att = -wt * wt * A;
        double Ats = -wt * ws * A;
        double Ass = -ws * ws * A;
        double B = std::cos(vt * t);
        double Bt = -vt * std::sin(vt * t);
        double Btt = -vt * vt * B;
        j.phi = c0 + c1 * s + a * A + b * s * B;
        j.phi_t = a * At + b * s * Bt;
        j.phi_s = c1 + a * As + b * B;
        j.phi_tt = a * Att + b * s * Btt;
        j.phi_ts = a * Ats + b * Bt;
        j.phi_ss = a * Ass;
        return j;
    };
    return f;
}

}  // namespace lagflow
