#include "lagflow/inhomogeneous_laws.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace lagflow {

namespace {

constexpr std::array<double, 7> kD1{-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0,
                                    3.0 / 4,   -3.0 / 20, 1.0 / 60};

template <typename F>
double fd_r(F&& f, double r, double h) {
    double acc = 0.0;
    for (int k = -3; k <= 3; ++k)
        if (k != 0) acc += kD1[static_cast<std::size_t>(k + 3)] * f(r + k * h);
    return acc / h;
}

}  // namespace

InhomogeneousCheck inhomogeneous_cl_check(InhomogeneousKind kind, const WeightF& F,
                                          const WeightH& h, const RadialFields& fields,
                                          double t, const GasModel& gas, double r_lo,
                                          double r_hi, int n_samples) {
    if (!(r_hi > r_lo)) throw std::invalid_argument("inhomogeneous_cl_check: empty r range");
    if (gas.n >= 1 && !(r_lo > 0.0))
        throw std::domain_error("inhomogeneous_cl_check: r must be bounded away from 0");

    const double g = gas.gamma;
    const double hr = 0.01 * (r_hi - r_lo);

    auto z_of = [&](double r) { return fields.p(r) / std::pow(fields.rho(r), g); };

    // flux profile at fixed t, as a function of r alone
    auto flux = [&](double r) -> double {
        double rho = fields.rho(r), u = fields.u(r), p = fields.p(r);
        switch (kind) {
            case InhomogeneousKind::mass_F:
                return rho * u * F.value(t, r, z_of(r));
            case InhomogeneousKind::momentum_h:
                return h.value(t, r) * (rho * u * u + p);
            case InhomogeneousKind::energy_h:
                return h.value(t, r) * (0.5 * rho * u * u + g * p / (g - 1.0)) * u;
        }
        return 0.0;
    };

    InhomogeneousCheck out;
    for (int i = 0; i < n_samples; ++i) {
        double r = r_lo + 7 * hr + (r_hi - r_lo - 14 * hr) * double(i) / (n_samples - 1);
        double rho = fields.rho(r), u = fields.u(r), p = fields.p(r);
        if (!(rho > 0.0)) throw std::domain_error("inhomogeneous_cl_check: rho must be > 0");

        double rho_r = fd_r(fields.rho, r, hr);
        double u_r = fd_r(fields.u, r, hr);
        double p_r = fd_r(fields.p, r, hr);

        // time derivatives from the flow equations
        double div = u_r + gas.n * u / r;
        double rho_t = -u * rho_r - rho * div;
        double u_t = -u * u_r - p_r / rho;
        double p_t = -u * p_r - g * p * div;

        double dflux = fd_r(flux, r, hr);

        double ddensity = 0.0, source = 0.0;
        switch (kind) {
            case InhomogeneousKind::mass_F: {
                double z = p / std::pow(rho, g);
                double z_t = p_t / std::pow(rho, g) - g * p * rho_t / std::pow(rho, g + 1.0);
                ddensity = rho_t * F.value(t, r, z) +
                           rho * (F.d_t(t, r, z) + F.d_z(t, r, z) * z_t);
                source = rho * (F.d_t(t, r, z) +
                                u * (F.d_r(t, r, z) - gas.n * F.value(t, r, z) / r));
                break;
            }
            case InhomogeneousKind::momentum_h: {
                ddensity = h.d_t(t, r) * rho * u + h.value(t, r) * (rho_t * u + rho * u_t);
                source = h.d_t(t, r) * rho * u + h.d_r(t, r) * (rho * u * u + p) -
                         gas.n / r * h.value(t, r) * rho * u * u;
                break;
            }
            case InhomogeneousKind::energy_h: {
                double W = 0.5 * rho * u * u + p / (g - 1.0);
                double W_t = 0.5 * rho_t * u * u + rho * u * u_t + p_t / (g - 1.0);
                ddensity = h.d_t(t, r) * W + h.value(t, r) * W_t;
                source = h.d_t(t, r) * W +
                         (h.d_r(t, r) - gas.n / r * h.value(t, r)) *
                             (0.5 * rho * u * u + g * p / (g - 1.0)) * u;
                break;
            }
        }
        out.max_residual = std::max(out.max_residual, std::abs(ddensity + dflux - source));
        out.max_source = std::max(out.max_source, std::abs(source));
    }
    return out;
}

double inhomogeneous_cl_residual(InhomogeneousKind kind, const WeightF& F, const WeightH& h,
                                 const RadialFields& fields, double t, const GasModel& gas,
                                 double r_lo, double r_hi, int n_samples) {
    return inhomogeneous_cl_check(kind, F, h, fields, t, gas, r_lo, r_hi, n_samples)
        .max_residual;
}

}  // namespace lagflow
