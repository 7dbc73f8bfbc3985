#include "lagflow/conservation_laws.hpp"

#include <cmath>

namespace lagflow {

namespace {

double pow_phi(double base, double expo) { return expo == 0.0 ? 1.0 : std::pow(base, expo); }

constexpr double zero3(double, double, double) { return 0.0; }

// gas-variable building blocks
double energy_density(const GasSample& g, const GasModel& gas) {
    return 0.5 * g.u * g.u + g.S / (gas.gamma - 1.0) * std::pow(g.rho, gas.gamma - 1.0);
}
double energy_flux(const GasSample& g, const GasModel& gas) {
    return g.u * g.S * std::pow(g.r, gas.n) * std::pow(g.rho, gas.gamma);
}
double mass_flux_term(const GasSample& g, const GasModel& gas) {
    // phi_s phi_t in gas variables
    return g.u / (std::pow(g.r, gas.n) * g.rho);
}
double counter_energy(const GasSample& g, const GasModel& gas) {
    return 0.5 * g.u * g.u - gas.gamma * g.S / (gas.gamma - 1.0) * std::pow(g.rho, gas.gamma - 1.0);
}
double radial_pressure_moment(const GasSample& g, const GasModel& gas) {
    return g.S * std::pow(g.r, gas.n + 1) * std::pow(g.rho, gas.gamma);
}

// Eulerian building blocks
double e_energy_density(const EulerSample& g, const GasModel& gas) {
    return std::pow(g.r, gas.n) *
           (0.5 * g.rho * g.u * g.u + g.S / (gas.gamma - 1.0) * std::pow(g.rho, gas.gamma));
}
double e_energy_flux(const EulerSample& g, const GasModel& gas) {
    return std::pow(g.r, gas.n) *
           (0.5 * g.rho * g.u * g.u +
            gas.gamma * g.S / (gas.gamma - 1.0) * std::pow(g.rho, gas.gamma)) *
           g.u;
}
double e_radial_momentum(const EulerSample& g, const GasModel& gas) {
    return std::pow(g.r, gas.n + 1) * g.rho * g.u;
}
double e_pressure_moment(const EulerSample& g, const GasModel& gas) {
    return std::pow(g.r, gas.n + 1) * (g.rho * g.u * g.u + g.S * std::pow(g.rho, gas.gamma));
}
double e_specific_energy_flux(const EulerSample& g, const GasModel& gas) {
    return 0.5 * g.u * g.u +
           gas.gamma * g.S / (gas.gamma - 1.0) * std::pow(g.rho, gas.gamma - 1.0);
}

double recover_power_s(const EulerSample& g, const GasModel& gas, double q) {
    if (g.S_r == 0.0)
        throw singular_constraint_error(
            "eulerian_density_convert: S_r = 0, cannot recover s in the power case");
    return q * std::pow(g.r, gas.n) * g.rho * g.S / g.S_r;
}

}  // namespace

const char* law_name(LawId id) {
    switch (id) {
        case LawId::energy_general: return "energy-general";
        case LawId::momentum_n0: return "momentum-n0";
        case LawId::center_of_mass_n0: return "center-of-mass-n0";
        case LawId::projective_1_gstar: return "projective-1-gstar";
        case LawId::projective_2_gstar: return "projective-2-gstar";
        case LawId::isentropic_z2: return "isentropic-Z2";
        case LawId::isentropic_z3: return "isentropic-Z3";
        case LawId::power_z2: return "power-Z2";
        case LawId::power_zq: return "power-Zq";
        case LawId::exponential_z2: return "exponential-Z2";
        case LawId::mass: return "mass";
        case LawId::entropy_pathline: return "entropy-pathline";
    }
    return "?";
}

std::vector<LawId> all_law_ids() {
    return {LawId::energy_general,     LawId::momentum_n0,     LawId::center_of_mass_n0,
            LawId::projective_1_gstar, LawId::projective_2_gstar, LawId::isentropic_z2,
            LawId::isentropic_z3,      LawId::power_z2,        LawId::power_zq,
            LawId::exponential_z2,     LawId::mass,            LawId::entropy_pathline};
}

double lagrangian_density(const PhiSample& z, const GasModel& gas) {
    const double g = gas.gamma;
    return 0.5 * z.phi_t * z.phi_t -
           z.S / (g - 1.0) * pow_phi(z.phi, gas.n * (1.0 - g)) * std::pow(z.phi_s, 1.0 - g);
}

double ConservationLaw::characteristic(const PhiSample& z) const {
    return sym.eta(z.t, z.s, z.phi) - sym.xi_t(z.t, z.s, z.phi) * z.phi_t -
           sym.xi_s(z.t, z.s, z.phi) * z.phi_s;
}

double ConservationLaw::Tt_phi(const PhiSample& z) const {
    if (id == LawId::mass) return 1.0;
    if (id == LawId::entropy_pathline) return z.S;
    const double L = lagrangian_density(z, gas);
    return sigma * (sym.xi_t(z.t, z.s, z.phi) * L + characteristic(z) * z.phi_t -
                    sym.B1(z.t, z.s, z.phi));
}

double ConservationLaw::Ts_phi(const PhiSample& z) const {
    if (id == LawId::mass || id == LawId::entropy_pathline) return 0.0;
    const double L = lagrangian_density(z, gas);
    const double dL_dphis =
        z.S * pow_phi(z.phi, gas.n * (1.0 - gas.gamma)) * std::pow(z.phi_s, -gas.gamma);
    return sigma * (sym.xi_s(z.t, z.s, z.phi) * L + characteristic(z) * dL_dphis -
                    sym.B2(z.t, z.s, z.phi));
}

bool law_applicable(LawId id, const GasModel& gas, const EntropyProfile& profile) {
    const bool gstar = gas.is_gamma_star();
    switch (id) {
        case LawId::mass:
        case LawId::entropy_pathline:
        case LawId::energy_general:
            return true;
        case LawId::momentum_n0:
        case LawId::center_of_mass_n0:
            return gas.n == 0;
        case LawId::projective_1_gstar:
        case LawId::projective_2_gstar:
            return gstar;
        case LawId::isentropic_z2:
            return profile.kind() == EntropyKind::constant;
        case LawId::isentropic_z3:
            // at gamma* the generator degenerates to the projective scaling
            return profile.kind() == EntropyKind::constant && !gstar;
        case LawId::power_z2:
            return profile.kind() == EntropyKind::power && !gstar;
        case LawId::power_zq: {
            if (profile.kind() != EntropyKind::power || !gstar) return false;
            double qstar = -2.0 * (gas.n + 2.0) / (gas.n + 1.0);
            return std::abs(profile.q() - qstar) <= 1e-12 * std::abs(qstar);
        }
        case LawId::exponential_z2:
            return profile.kind() == EntropyKind::exponential && !gstar;
    }
    return false;
}

ConservationLaw make_law(LawId id, const GasModel& gas, double q) {
    ConservationLaw law;
    law.id = id;
    law.name = law_name(id);
    law.gas = gas;
    law.q = q;
    law.sym.xi_t = zero3;
    law.sym.xi_s = zero3;
    law.sym.eta = zero3;
    law.sym.B1 = zero3;
    law.sym.B2 = zero3;

    const int n = gas.n;
    const double g = gas.gamma;

    switch (id) {
        case LawId::mass:
            law.sigma = 0.0;
            law.Tt_gas = [](const GasSample&) { return 1.0; };
            law.Ts_gas = [](const GasSample&) { return 0.0; };
            law.eTt = [gas](const EulerSample& z) { return std::pow(z.r, gas.n) * z.rho; };
            law.eTr = [gas](const EulerSample& z) { return std::pow(z.r, gas.n) * z.rho * z.u; };
            break;

        case LawId::entropy_pathline:
            law.sigma = 0.0;
            law.Tt_gas = [](const GasSample& z) { return z.S; };
            law.Ts_gas = [](const GasSample&) { return 0.0; };
            law.eTt = [gas](const EulerSample& z) { return std::pow(z.r, gas.n) * z.rho * z.S; };
            law.eTr = [gas](const EulerSample& z) {
                return std::pow(z.r, gas.n) * z.rho * z.u * z.S;
            };
            break;

        case LawId::energy_general:
            law.sigma = -1.0;
            law.sym.xi_t = [](double, double, double) { return 1.0; };
            law.Tt_gas = [gas](const GasSample& z) { return energy_density(z, gas); };
            law.Ts_gas = [gas](const GasSample& z) { return energy_flux(z, gas); };
            law.eTt = [gas](const EulerSample& z) { return e_energy_density(z, gas); };
            law.eTr = [gas](const EulerSample& z) { return e_energy_flux(z, gas); };
            break;

        case LawId::momentum_n0:
            law.sigma = 1.0;
            law.sym.eta = [](double, double, double) { return 1.0; };
            law.Tt_gas = [](const GasSample& z) { return z.u; };
            law.Ts_gas = [g](const GasSample& z) { return z.S * std::pow(z.rho, g); };
            law.eTt = [](const EulerSample& z) { return z.rho * z.u; };
            law.eTr = [g](const EulerSample& z) {
                return z.rho * z.u * z.u + z.S * std::pow(z.rho, g);
            };
            break;

        case LawId::center_of_mass_n0:
            law.sigma = -1.0;
            law.sym.eta = [](double t, double, double) { return t; };
            law.sym.B1 = [](double, double, double phi) { return phi; };
            law.sym.variational = false;
            law.Tt_gas = [](const GasSample& z) { return z.r - z.t * z.u; };
            law.Ts_gas = [g](const GasSample& z) { return -z.t * z.S * std::pow(z.rho, g); };
            law.eTt = [](const EulerSample& z) { return z.rho * (z.r - z.t * z.u); };
            law.eTr = [g](const EulerSample& z) {
                return z.rho * z.u * (z.r - z.t * z.u) - z.t * z.S * std::pow(z.rho, g);
            };
            break;

        case LawId::projective_1_gstar:
            law.sigma = 1.0;
            law.sym.xi_t = [](double t, double, double) { return 2.0 * t; };
            law.sym.eta = [](double, double, double phi) { return phi; };
            law.Tt_gas = [gas](const GasSample& z) {
                return -2.0 * z.t * energy_density(z, gas) + z.r * z.u;
            };
            law.Ts_gas = [gas](const GasSample& z) {
                return -2.0 * z.t * energy_flux(z, gas) + radial_pressure_moment(z, gas);
            };
            law.eTt = [gas](const EulerSample& z) {
                return -2.0 * z.t * e_energy_density(z, gas) + e_radial_momentum(z, gas);
            };
            law.eTr = [gas](const EulerSample& z) {
                return -2.0 * z.t * e_energy_flux(z, gas) + e_pressure_moment(z, gas);
            };
            break;

        case LawId::projective_2_gstar:
            law.sigma = 1.0;
            law.sym.xi_t = [](double t, double, double) { return t * t; };
            law.sym.eta = [](double t, double, double phi) { return t * phi; };
            law.sym.B1 = [](double, double, double phi) { return 0.5 * phi * phi; };
            law.sym.variational = false;
            law.Tt_gas = [gas](const GasSample& z) {
                return -z.t * z.t * energy_density(z, gas) + z.t * z.r * z.u - 0.5 * z.r * z.r;
            };
            law.Ts_gas = [gas](const GasSample& z) {
                return -z.t * z.t * energy_flux(z, gas) + z.t * radial_pressure_moment(z, gas);
            };
            law.eTt = [gas](const EulerSample& z) {
                return -z.t * z.t * e_energy_density(z, gas) + z.t * e_radial_momentum(z, gas) -
                       0.5 * std::pow(z.r, gas.n + 2) * z.rho;
            };
            law.eTr = [gas](const EulerSample& z) {
                return -z.t * z.t * e_energy_flux(z, gas) + z.t * e_pressure_moment(z, gas) -
                       0.5 * std::pow(z.r, gas.n + 2) * z.rho * z.u;
            };
            break;

        case LawId::isentropic_z2:
            law.sigma = 1.0;
            law.sym.xi_s = [](double, double, double) { return 1.0; };
            law.Tt_gas = [gas](const GasSample& z) { return -mass_flux_term(z, gas); };
            law.Ts_gas = [gas](const GasSample& z) { return counter_energy(z, gas); };
            law.eTt = [](const EulerSample& z) { return -z.u; };
            law.eTr = [gas](const EulerSample& z) {
                return -0.5 * z.u * z.u -
                       gas.gamma * z.S / (gas.gamma - 1.0) * std::pow(z.rho, gas.gamma - 1.0);
            };
            break;

        case LawId::isentropic_z3:
        case LawId::power_z2: {
            // scaling symmetry a t d_t + b s d_s + c phi d_phi; the power case
            // shifts the time weight by 2q and the phi weight by q
            double qq = (id == LawId::power_z2) ? q : 0.0;
            double a = (n + 3) * g + 2.0 * qq - n - 1;
            double b = (n + 1) * g - n - 3;
            double c = g + qq + 1.0;
            law.sigma = 1.0;
            law.sym.xi_t = [a](double t, double, double) { return a * t; };
            law.sym.xi_s = [b](double, double s, double) { return b * s; };
            law.sym.eta = [c](double, double, double phi) { return c * phi; };
            law.Tt_gas = [gas, a, b, c](const GasSample& z) {
                return -a * z.t * energy_density(z, gas) - b * z.s * mass_flux_term(z, gas) +
                       c * z.r * z.u;
            };
            law.Ts_gas = [gas, a, b, c](const GasSample& z) {
                return -a * z.t * energy_flux(z, gas) + b * z.s * counter_energy(z, gas) +
                       c * radial_pressure_moment(z, gas);
            };
            const bool power = (id == LawId::power_z2);
            law.eTt = [gas, a, b, c, power, q](const EulerSample& z) {
                double s = power ? recover_power_s(z, gas, q) : z.s;
                return -a * z.t * e_energy_density(z, gas) - b * s * z.u +
                       c * e_radial_momentum(z, gas);
            };
            law.eTr = [gas, a, b, c, power, q](const EulerSample& z) {
                double s = power ? recover_power_s(z, gas, q) : z.s;
                return -a * z.t * e_energy_flux(z, gas) - b * s * e_specific_energy_flux(z, gas) +
                       c * e_pressure_moment(z, gas);
            };
            break;
        }

        case LawId::power_zq:
            law.sigma = 1.0;
            law.sym.xi_t = [](double t, double, double) { return t; };
            law.sym.xi_s = [](double, double s, double) { return s; };
            law.Tt_gas = [gas](const GasSample& z) {
                return -z.t * energy_density(z, gas) - z.s * mass_flux_term(z, gas);
            };
            law.Ts_gas = [gas](const GasSample& z) {
                return -z.t * energy_flux(z, gas) + z.s * counter_energy(z, gas);
            };
            law.eTt = [gas, q](const EulerSample& z) {
                double s = recover_power_s(z, gas, q);
                return -z.t * e_energy_density(z, gas) - s * z.u;
            };
            law.eTr = [gas, q](const EulerSample& z) {
                double s = recover_power_s(z, gas, q);
                return -z.t * e_energy_flux(z, gas) - s * e_specific_energy_flux(z, gas);
            };
            break;

        case LawId::exponential_z2: {
            double b = (n + 1) * g - n - 3;
            law.sigma = 1.0;
            law.sym.xi_t = [q](double t, double, double) { return 2.0 * q * t; };
            law.sym.xi_s = [b](double, double, double) { return b; };
            law.sym.eta = [q](double, double, double phi) { return q * phi; };
            law.Tt_gas = [gas, b, q](const GasSample& z) {
                return -2.0 * q * z.t * energy_density(z, gas) - b * mass_flux_term(z, gas) +
                       q * z.r * z.u;
            };
            law.Ts_gas = [gas, b, q](const GasSample& z) {
                return -2.0 * q * z.t * energy_flux(z, gas) + b * counter_energy(z, gas) +
                       q * radial_pressure_moment(z, gas);
            };
            law.eTt = [gas, b, q](const EulerSample& z) {
                return -2.0 * q * z.t * e_energy_density(z, gas) - b * z.u +
                       q * e_radial_momentum(z, gas);
            };
            law.eTr = [gas, b, q](const EulerSample& z) {
                return -2.0 * q * z.t * e_energy_flux(z, gas) -
                       b * e_specific_energy_flux(z, gas) + q * e_pressure_moment(z, gas);
            };
            break;
        }
    }
    return law;
}

std::vector<ConservationLaw> catalog(const GasModel& gas, const EntropyProfile& profile) {
    std::vector<ConservationLaw> out;
    for (LawId id : all_law_ids())
        if (law_applicable(id, gas, profile)) out.push_back(make_law(id, gas, profile.q()));
    return out;
}

GasSample to_gas_sample(const PhiSample& z, const GasModel& gas) {
    GasSample g;
    g.t = z.t;
    g.s = z.s;
    g.r = z.phi;
    g.u = z.phi_t;
    g.rho = 1.0 / (std::pow(z.phi, gas.n) * z.phi_s);
    g.p = z.S * std::pow(g.rho, gas.gamma);
    g.S = z.S;
    return g;
}

std::pair<double, double> eulerian_density_convert(const ConservationLaw& law,
                                                   const EulerSample& z) {
    if (law.gas.n >= 1 && !(z.r > 0.0))
        throw std::domain_error("eulerian_density_convert: r must be > 0 for n >= 1");
    GasSample g;
    g.t = z.t;
    g.r = z.r;
    g.u = z.u;
    g.rho = z.rho;
    g.p = z.p;
    g.S = z.S;
    bool power_case = law.id == LawId::power_z2 || law.id == LawId::power_zq;
    g.s = power_case ? recover_power_s(z, law.gas, law.q) : z.s;

    double rnrho = std::pow(z.r, law.gas.n) * z.rho;
    double Tt = law.Tt_gas(g);
    double Ts = law.Ts_gas(g);
    return {rnrho * Tt, rnrho * z.u * Tt + Ts};
}

}  // namespace lagflow
