#include "lagflow/noether_check.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "lagflow/errors.hpp"

namespace lagflow {

namespace {

// 6th-order central first-derivative weights at offsets -3..3, divided by h
constexpr std::array<double, 7> kD1{-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0,
                                    3.0 / 4,   -3.0 / 20, 1.0 / 60};

template <typename F>
double fd_derivative(F&& f, double x, double h) {
    double acc = 0.0;
    for (int k = -3; k <= 3; ++k)
        if (k != 0) acc += kD1[static_cast<std::size_t>(k + 3)] * f(x + k * h);
    return acc / h;
}

}  // namespace

std::vector<std::pair<double, double>> interior_grid(const SmoothField& field, int nt, int ns) {
    double ht = 0.01 * (field.t_hi - field.t_lo);
    double hs = 0.01 * (field.s_hi - field.s_lo);
    double t0 = field.t_lo + 4 * ht, t1 = field.t_hi - 4 * ht;
    double s0 = field.s_lo + 4 * hs, s1 = field.s_hi - 4 * hs;
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(nt) * ns);
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < ns; ++j)
            pts.emplace_back(t0 + (t1 - t0) * (nt == 1 ? 0.5 : double(i) / (nt - 1)),
                             s0 + (s1 - s0) * (ns == 1 ? 0.5 : double(j) / (ns - 1)));
    return pts;
}

NoetherCheck noether_identity_check(const ConservationLaw& law, const SmoothField& field,
                                    const EntropyProfile& profile,
                                    const std::vector<std::pair<double, double>>& grid) {
    if (!law_applicable(law.id, law.gas, profile))
        throw applicability_error(std::string("noether_identity_check: law ") + law.name +
                                  " not applicable to this (n, gamma, entropy) case");
    const double ht = 0.01 * (field.t_hi - field.t_lo);
    const double hs = 0.01 * (field.s_hi - field.s_lo);
    if (!(ht > 0.0) || !(hs > 0.0))
        throw std::invalid_argument("noether_identity_check: degenerate field domain");

    NoetherCheck out;
    for (auto [t, s] : grid) {
        if (t - 3 * ht < field.t_lo || t + 3 * ht > field.t_hi || s - 3 * hs < field.s_lo ||
            s + 3 * hs > field.s_hi)
            throw std::invalid_argument(
                "noether_identity_check: grid point too close to the domain boundary");

        double dTt = fd_derivative(
            [&](double tt) { return law.Tt_phi(field.sample(tt, s, profile)); }, t, ht);
        double dTs = fd_derivative(
            [&](double ss) { return law.Ts_phi(field.sample(t, ss, profile)); }, s, hs);
        double A = dTt + dTs;

        PhiSample z = field.sample(t, s, profile);
        FieldJet j = field.jet(t, s);
        double E = euler_lagrange_residual(j, z.S, z.dS, law.gas);
        double B = law.sigma * law.characteristic(z) * E;

        out.max_identity_residual = std::max(out.max_identity_residual, std::abs(A - B));
        out.max_divergence = std::max(out.max_divergence, std::abs(A));
    }
    return out;
}

double noether_identity_residual(const ConservationLaw& law, const SmoothField& field,
                                 const EntropyProfile& profile,
                                 const std::vector<std::pair<double, double>>& grid) {
    return noether_identity_check(law, field, profile, grid).max_identity_residual;
}

}  // namespace lagflow
