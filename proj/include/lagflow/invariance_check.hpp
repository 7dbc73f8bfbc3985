#pragma once

#include <vector>

#include "lagflow/generators.hpp"
#include "lagflow/scheme_config.hpp"
#include "lagflow/scheme_residuals.hpp"
#include "lagflow/stencil.hpp"

namespace lagflow {

/// A short run of a scheme kept as raw layers; stencils are cut from
/// consecutive layer pairs at interior nodes.
struct SolutionSegment {
    MassMesh mesh;                  // mass-coordinate geometry (s is shared by all layers)
    std::vector<double> times;      // layer times, size = layers.size()
    std::vector<FlowState> layers;  // at least two
};

/// Runs `steps` fixed-tau steps of the scheme and collects the layers.
SolutionSegment collect_segment(SchemeKind scheme, const FlowState& initial, MassMesh mesh,
                                const GasModel& gas, const SchemeConfig& cfg, int steps);

std::vector<Stencil> segment_stencils(const SolutionSegment& seg);

struct InvarianceReport {
    GenId generator;
    double a = 0.0;
    double tol0 = 0.0;          // scheme residual level before transforming
    double max_residual = 0.0;  // max scheme residual over transformed stencils
    bool invariant = false;     // max_residual - tol0 <= 10 tol0
};

/// Transforms every stencil of the segment by the finite flow of `gen` for
/// each parameter in `a_list` and re-evaluates the scheme residuals.
/// tol0 is floored at 1e-13 so exact solutions do not produce a zero gate.
std::vector<InvarianceReport> scheme_invariance_check(SchemeKind scheme,
                                                      const GeneratorGD& gen,
                                                      const SolutionSegment& segment,
                                                      const GasModel& gas,
                                                      const SchemeConfig& cfg,
                                                      const std::vector<double>& a_list);

}  // namespace lagflow
