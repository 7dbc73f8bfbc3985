#pragma once

#include <string>
#include <vector>

#include "lagflow/flow_state.hpp"
#include "lagflow/gas_model.hpp"
#include "lagflow/stencil.hpp"

namespace lagflow {

enum class Frame { lagrangian, eulerian };

/// Lie point symmetries of the flow equations in gas-dynamics variables.
enum class GenId {
    time_translation,       // X1
    dilation_rt,            // X2: t, (s), r scaling
    dilation_rho,           // X3: t, (s), r, u, rho scaling
    dilation_p,             // X4: (s), rho, p scaling
    space_translation,      // X*,n  (n = 0 only)
    galilean,               // X**,n (n = 0 only)
    projective,             // X*,gamma (gamma = gamma* only)
    mass_translation,       // X0 (Lagrangian frame only)
};

const char* generator_name(GenId id);
GenId generator_from_name(const std::string& name);

/// One point of the prolonged space the generators act on.
struct GdPoint {
    double t, s, r, u, rho, p;
};

struct GeneratorGD {
    GenId id;
    Frame frame;
    GasModel gas;

    /// Infinitesimal coefficients at a point (s is ignored in the Eulerian frame).
    double xi_t(const GdPoint& z) const;
    double xi_s(const GdPoint& z) const;   // 0 in the Eulerian frame
    double xi_r(const GdPoint& z) const;
    double eta_u(const GdPoint& z) const;
    double eta_rho(const GdPoint& z) const;
    double eta_p(const GdPoint& z) const;

    bool applicable() const;
};

GeneratorGD make_generator(GenId id, Frame frame, const GasModel& gas);

/// Generators admitted by (gas, entropy-case kind) in the given frame.
std::vector<GeneratorGD> admitted_generators(Frame frame, const GasModel& gas);

/// Exact one-parameter flow applied to a single point.  The projective flow
/// requires 1 - a t > 0.
GdPoint finite_transform(const GeneratorGD& gen, double a, const GdPoint& z);

/// Same flow applied to every variable of a two-layer stencil.
Stencil finite_transform(const GeneratorGD& gen, double a, const Stencil& st);

/// Same flow applied to a whole flow state and its mesh.
void finite_transform(const GeneratorGD& gen, double a, FlowState& state, MassMesh& mesh);

/// Reference flow by numeric integration of the generator ODEs (test oracle).
GdPoint integrate_generator_flow(const GeneratorGD& gen, double a, const GdPoint& z,
                                 int n_steps = 2000);

/// Discrete orthogonality criterion D_{+h}(xi^t) = -D_{+tau}(xi^x) evaluated
/// on random lattice samples; true iff it holds identically (1e-12).
bool mesh_orthogonality_criterion(const GeneratorGD& gen);

}  // namespace lagflow
