#pragma once

#include <vector>

#include "lagflow/conservation_laws.hpp"
#include "lagflow/smooth_field.hpp"

namespace lagflow {

struct NoetherCheck {
    double max_identity_residual = 0.0;  // max |D_t T^t + D_s T^s - sigma Q E|
    double max_divergence = 0.0;         // max |D_t T^t + D_s T^s|
};

/// Evaluates the off-shell identity D_t T^t + D_s T^s = sigma Q E(phi) on a
/// grid of points.  Total derivatives are 6th-order central differences of
/// the composed density maps; the step is 1e-2 of the domain extent in each
/// direction.  Grid points must sit at least 3 steps inside the domain.
NoetherCheck noether_identity_check(const ConservationLaw& law, const SmoothField& field,
                                    const EntropyProfile& profile,
                                    const std::vector<std::pair<double, double>>& grid);

/// Convenience wrapper returning only the identity residual.
double noether_identity_residual(const ConservationLaw& law, const SmoothField& field,
                                 const EntropyProfile& profile,
                                 const std::vector<std::pair<double, double>>& grid);

/// Uniform interior grid for the rectangle of `field`.
std::vector<std::pair<double, double>> interior_grid(const SmoothField& field, int nt, int ns);

}  // namespace lagflow
