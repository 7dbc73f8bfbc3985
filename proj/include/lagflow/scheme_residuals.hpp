#pragma once

#include <array>

#include "lagflow/fd_invariants.hpp"
#include "lagflow/gas_model.hpp"
#include "lagflow/scheme_config.hpp"
#include "lagflow/stencil.hpp"

namespace lagflow {

/// Dimensionless per-stencil residuals of the implicit conservative scheme
/// (mass, velocity, energy, coordinate), with the polytropic closure folded
/// into the energy equation.  Each residual is normalized by a stencil scale
/// that shares its weight under the admitted group, so solutions keep the
/// residuals small under admitted transformations.
std::array<double, 4> sp_residuals(const Stencil& st, const GasModel& gas, double alpha);

/// Same for the explicit invariant scheme (mass identity, velocity, entropy,
/// coordinate).
std::array<double, 4> explicit_residuals(const Stencil& st, const GasModel& gas);

/// The scheme equations rewritten through the finite-difference invariant
/// bases; zero exactly where the direct forms are zero.
std::array<double, 4> sp_residuals_invariant_form(const Stencil& st, const GasModel& gas,
                                                  double alpha);
std::array<double, 4> explicit_residuals_invariant_form(const Stencil& st, const GasModel& gas);

}  // namespace lagflow
