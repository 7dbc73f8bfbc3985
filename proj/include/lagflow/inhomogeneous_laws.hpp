#pragma once

#include <functional>
#include <vector>

#include "lagflow/gas_model.hpp"

namespace lagflow {

enum class InhomogeneousKind { mass_F, momentum_h, energy_h };

/// Weight F(t, r, z) with z = p rho^{-gamma}; explicit partials required.
struct WeightF {
    std::function<double(double t, double r, double z)> value, d_t, d_r, d_z;
};

/// Weight h(t, r); explicit partials required.
struct WeightH {
    std::function<double(double t, double r)> value, d_t, d_r;
};

/// Smooth radial profiles rho(r), u(r), p(r) at one fixed time.
struct RadialFields {
    std::function<double(double)> rho, u, p;
};

struct InhomogeneousCheck {
    double max_residual = 0.0;  // |d_t(density) + d_r(flux) - source|
    double max_source = 0.0;    // |source| over the sample grid
};

/// Verifies the weighted Eulerian balance identities
///   [rho F]_t + [rho u F]_r           = rho (F_t + u (F_r - n F / r)),
///   [h rho u]_t + [h (rho u^2+p)]_r   = h_t rho u + h_r (rho u^2+p) - n h rho u^2 / r,
///   [h (rho u^2/2 + p/(g-1))]_t + [h (rho u^2/2 + g p/(g-1)) u]_r
///       = h_t (rho u^2/2 + p/(g-1)) + (h_r - n h / r)(rho u^2/2 + g p/(g-1)) u,
/// with the time derivatives of (rho, u, p) replaced from the flow equations
/// and the r-derivatives taken by 6th-order finite differences over
/// [r_lo, r_hi] (bounded away from 0 for n >= 1).
InhomogeneousCheck inhomogeneous_cl_check(InhomogeneousKind kind, const WeightF& F,
                                          const WeightH& h, const RadialFields& fields,
                                          double t, const GasModel& gas, double r_lo,
                                          double r_hi, int n_samples = 33);

double inhomogeneous_cl_residual(InhomogeneousKind kind, const WeightF& F, const WeightH& h,
                                 const RadialFields& fields, double t, const GasModel& gas,
                                 double r_lo, double r_hi, int n_samples = 33);

}  // namespace lagflow
