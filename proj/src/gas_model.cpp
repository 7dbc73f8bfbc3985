#include "lagflow/gas_model.hpp"

#include <cmath>

namespace lagflow {

double specific_internal_energy(double rho, double p, const GasModel& gas) {
    if (!(rho > 0.0)) throw std::domain_error("specific_internal_energy: rho must be > 0");
    if (p < 0.0) throw std::domain_error("specific_internal_energy: p must be >= 0");
    return p / ((gas.gamma - 1.0) * rho);
}

double entropy_variable(double rho, double p, const GasModel& gas) {
    if (!(rho > 0.0)) throw std::domain_error("entropy_variable: rho must be > 0");
    return p / std::pow(rho, gas.gamma);
}

double sound_speed(double rho, double p, const GasModel& gas) {
    if (!(rho > 0.0) || !(p >= 0.0)) throw std::domain_error("sound_speed: need rho > 0, p >= 0");
    return std::sqrt(gas.gamma * p / rho);
}

}  // namespace lagflow
