#include "lagflow/invariance_check.hpp"

#include <cmath>
#include <stdexcept>

#include "lagflow/schemes.hpp"

namespace lagflow {

SolutionSegment collect_segment(SchemeKind scheme, const FlowState& initial, MassMesh mesh,
                                const GasModel& gas, const SchemeConfig& cfg, int steps) {
    SolutionSegment seg;
    seg.layers.push_back(initial);
    seg.times.push_back(mesh.t);
    FlowState cur = initial;
    for (int k = 0; k < steps; ++k) {
        switch (scheme) {
            case SchemeKind::sp: {
                auto [next, rep] = sp_step(cur, mesh, gas, cfg);
                if (!rep.converged) throw std::runtime_error("collect_segment: step failed");
                cur = next;
                break;
            }
            case SchemeKind::sp_modified: {
                auto [next, rep] = sp_step_modified(cur, mesh, gas, cfg);
                if (!rep.converged) throw std::runtime_error("collect_segment: step failed");
                cur = next;
                break;
            }
            case SchemeKind::explicit_invariant:
                cur = explicit_invariant_step(cur, mesh, gas, cfg);
                break;
        }
        mesh.t += mesh.tau;
        seg.times.push_back(mesh.t);
        seg.layers.push_back(cur);
    }
    seg.mesh = mesh;
    return seg;
}

std::vector<Stencil> segment_stencils(const SolutionSegment& seg) {
    std::vector<Stencil> out;
    const int N = seg.layers.front().n_cells();
    for (std::size_t j = 0; j + 1 < seg.layers.size(); ++j) {
        double tau = seg.times[j + 1] - seg.times[j];
        for (int i = 1; i <= N - 1; ++i)
            out.push_back(make_stencil(seg.layers[j], seg.layers[j + 1], seg.mesh,
                                       seg.times[j], tau, i));
    }
    return out;
}

std::vector<InvarianceReport> scheme_invariance_check(SchemeKind scheme,
                                                      const GeneratorGD& gen,
                                                      const SolutionSegment& segment,
                                                      const GasModel& gas,
                                                      const SchemeConfig& cfg,
                                                      const std::vector<double>& a_list) {
    auto stencils = segment_stencils(segment);
    auto eval = [&](const Stencil& st) {
        auto r = (scheme == SchemeKind::explicit_invariant) ? explicit_residuals(st, gas)
                                                            : sp_residuals(st, gas, cfg.alpha);
        double m = 0.0;
        for (double v : r) m = std::max(m, std::abs(v));
        return m;
    };

    double tol0 = 1e-13;
    for (const Stencil& st : stencils) tol0 = std::max(tol0, eval(st));

    std::vector<InvarianceReport> out;
    for (double a : a_list) {
        InvarianceReport rep;
        rep.generator = gen.id;
        rep.a = a;
        rep.tol0 = tol0;
        for (const Stencil& st : stencils) {
            Stencil ts = finite_transform(gen, a, st);
            rep.max_residual = std::max(rep.max_residual, eval(ts));
        }
        rep.invariant = (rep.max_residual - tol0) <= 10.0 * tol0;
        out.push_back(rep);
    }
    return out;
}

}  // namespace lagflow
