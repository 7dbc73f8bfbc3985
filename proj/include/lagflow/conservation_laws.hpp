#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lagflow/entropy_profile.hpp"
#include "lagflow/errors.hpp"
#include "lagflow/gas_model.hpp"

namespace lagflow {

/// Continuous conservation laws of the one-dimensional polytropic flow in
/// mass Lagrangian coordinates, catalogued per entropy-classification case.
enum class LawId {
    energy_general,
    momentum_n0,
    center_of_mass_n0,
    projective_1_gstar,
    projective_2_gstar,
    isentropic_z2,
    isentropic_z3,
    power_z2,
    power_zq,
    exponential_z2,
    mass,
    entropy_pathline,
};

const char* law_name(LawId id);
std::vector<LawId> all_law_ids();

/// Point sample of the potential formulation: r = phi(t, s), with first
/// derivatives and the entropy value/derivative at s.
struct PhiSample {
    double t, s;
    double phi, phi_t, phi_s;
    double S, dS;
};

/// Point sample in gas-dynamics variables (Lagrangian coordinates).
struct GasSample {
    double t, s;
    double r, u, rho, p;
    double S;
};

/// Point sample in Eulerian coordinates.  s is carried along for the laws
/// whose densities retain the mass coordinate explicitly; S_r is the
/// Eulerian entropy gradient used to recover s in the power case.
struct EulerSample {
    double t, r, u, rho, p;
    double S, S_r;
    double s;
};

/// Symmetry generator coefficients and divergence terms attached to a law.
struct LawSymmetry {
    std::function<double(double t, double s, double phi)> xi_t, xi_s, eta, B1, B2;
    bool variational = true;  // B1 = B2 = 0 identically
};

class ConservationLaw {
public:
    LawId id;
    std::string name;
    GasModel gas;
    double q = 0.0;       // classification parameter for power/exponential cases
    double sigma = 0.0;   // orientation: D_t T^t + D_s T^s = sigma * Q * E(phi);
                          // 0 for the kinematic laws whose characteristic vanishes
    LawSymmetry sym;

    double Tt_phi(const PhiSample& z) const;
    double Ts_phi(const PhiSample& z) const;

    std::function<double(const GasSample&)> Tt_gas, Ts_gas;
    std::function<double(const EulerSample&)> eTt, eTr;

    /// Noether characteristic Q = eta - xi^t phi_t - xi^s phi_s.
    double characteristic(const PhiSample& z) const;
};

/// First-order Lagrangian L = phi_t^2/2 - S/(gamma-1) phi^{n(1-gamma)} phi_s^{1-gamma}.
double lagrangian_density(const PhiSample& z, const GasModel& gas);

bool law_applicable(LawId id, const GasModel& gas, const EntropyProfile& profile);

/// The law built for a concrete gas model; q is the entropy-case parameter
/// (ignored by laws that do not use it).
ConservationLaw make_law(LawId id, const GasModel& gas, double q = 0.0);

/// All laws applicable to (gas, profile).
std::vector<ConservationLaw> catalog(const GasModel& gas, const EntropyProfile& profile);

/// Gas-variable sample induced by a phi-sample: u = phi_t, rho = 1/(phi^n phi_s),
/// r = phi, p = S rho^gamma.
GasSample to_gas_sample(const PhiSample& z, const GasModel& gas);

/// Eulerian densities obtained from the stored Lagrangian gas-variable
/// densities through  ^eT^t = r^n rho T^t,  ^eT^r = r^n rho u T^t + T^s.
/// The power-case laws recover s from the sample via s = q r^n rho S / S_r
/// and require S_r != 0.
std::pair<double, double> eulerian_density_convert(const ConservationLaw& law,
                                                   const EulerSample& z);

}  // namespace lagflow
