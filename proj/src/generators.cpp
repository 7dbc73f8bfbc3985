#include "lagflow/generators.hpp"

#include <cmath>
#include <random>

#include "lagflow/errors.hpp"

namespace lagflow {

const char* generator_name(GenId id) {
    switch (id) {
        case GenId::time_translation: return "time-translation";
        case GenId::dilation_rt: return "dilation-rt";
        case GenId::dilation_rho: return "dilation-rho";
        case GenId::dilation_p: return "dilation-p";
        case GenId::space_translation: return "space-translation";
        case GenId::galilean: return "galilean";
        case GenId::projective: return "projective";
        case GenId::mass_translation: return "mass-translation";
    }
    return "?";
}

GenId generator_from_name(const std::string& name) {
    for (GenId id : {GenId::time_translation, GenId::dilation_rt, GenId::dilation_rho,
                     GenId::dilation_p, GenId::space_translation, GenId::galilean,
                     GenId::projective, GenId::mass_translation})
        if (name == generator_name(id)) return id;
    throw std::invalid_argument("unknown generator: " + name);
}

bool GeneratorGD::applicable() const {
    switch (id) {
        case GenId::space_translation:
        case GenId::galilean:
            return gas.n == 0;
        case GenId::projective:
            return gas.is_gamma_star();
        case GenId::mass_translation:
            return frame == Frame::lagrangian;
        default:
            return true;
    }
}

double GeneratorGD::xi_t(const GdPoint& z) const {
    switch (id) {
        case GenId::time_translation: return 1.0;
        case GenId::dilation_rt: return z.t;
        case GenId::dilation_rho: return 2.0 * z.t;
        case GenId::projective: return z.t * z.t;
        default: return 0.0;
    }
}

double GeneratorGD::xi_s(const GdPoint& z) const {
    if (frame == Frame::eulerian) return 0.0;
    switch (id) {
        case GenId::dilation_rt: return (gas.n + 1) * z.s;
        case GenId::dilation_rho: return (gas.n + 3) * z.s;
        case GenId::dilation_p: return z.s;
        case GenId::mass_translation: return 1.0;
        default: return 0.0;
    }
}

double GeneratorGD::xi_r(const GdPoint& z) const {
    switch (id) {
        case GenId::dilation_rt: return z.r;
        case GenId::dilation_rho: return z.r;
        case GenId::space_translation: return 1.0;
        case GenId::galilean: return z.t;
        case GenId::projective: return z.t * z.r;
        default: return 0.0;
    }
}

double GeneratorGD::eta_u(const GdPoint& z) const {
    switch (id) {
        case GenId::dilation_rho: return -z.u;
        case GenId::galilean: return 1.0;
        case GenId::projective: return z.r - z.t * z.u;
        default: return 0.0;
    }
}

double GeneratorGD::eta_rho(const GdPoint& z) const {
    switch (id) {
        case GenId::dilation_rho: return 2.0 * z.rho;
        case GenId::dilation_p: return z.rho;
        case GenId::projective: return -(gas.n + 1) * z.t * z.rho;
        default: return 0.0;
    }
}

double GeneratorGD::eta_p(const GdPoint& z) const {
    switch (id) {
        case GenId::dilation_p: return z.p;
        case GenId::projective: return -(gas.n + 3) * z.t * z.p;
        default: return 0.0;
    }
}

GeneratorGD make_generator(GenId id, Frame frame, const GasModel& gas) {
    if (id == GenId::mass_translation && frame == Frame::eulerian)
        throw applicability_error("mass-translation exists only in the Lagrangian frame");
    return GeneratorGD{id, frame, gas};
}

std::vector<GeneratorGD> admitted_generators(Frame frame, const GasModel& gas) {
    std::vector<GeneratorGD> out;
    for (GenId id : {GenId::time_translation, GenId::dilation_rt, GenId::dilation_rho,
                     GenId::dilation_p})
        out.push_back(make_generator(id, frame, gas));
    if (frame == Frame::lagrangian) out.push_back(make_generator(GenId::mass_translation, frame, gas));
    if (gas.n == 0) {
        out.push_back(make_generator(GenId::space_translation, frame, gas));
        out.push_back(make_generator(GenId::galilean, frame, gas));
    }
    if (gas.is_gamma_star()) out.push_back(make_generator(GenId::projective, frame, gas));
    return out;
}

GdPoint finite_transform(const GeneratorGD& gen, double a, const GdPoint& z) {
    GdPoint w = z;
    const int n = gen.gas.n;
    const bool lag = gen.frame == Frame::lagrangian;
    switch (gen.id) {
        case GenId::time_translation:
            w.t += a;
            break;
        case GenId::dilation_rt:
            w.t *= std::exp(a);
            if (lag) w.s *= std::exp((n + 1) * a);
            w.r *= std::exp(a);
            break;
        case GenId::dilation_rho:
            w.t *= std::exp(2.0 * a);
            if (lag) w.s *= std::exp((n + 3) * a);
            w.r *= std::exp(a);
            w.u *= std::exp(-a);
            w.rho *= std::exp(2.0 * a);
            break;
        case GenId::dilation_p:
            if (lag) w.s *= std::exp(a);
            w.rho *= std::exp(a);
            w.p *= std::exp(a);
            break;
        case GenId::space_translation:
            w.r += a;
            break;
        case GenId::galilean:
            w.r += a * z.t;
            w.u += a;
            break;
        case GenId::projective: {
            double lam = 1.0 - a * z.t;
            if (!(lam > 0.0))
                throw std::domain_error("projective transform: 1 - a t must stay > 0");
            w.t = z.t / lam;
            w.r = z.r / lam;
            w.u = z.u * lam + a * z.r;
            w.rho = z.rho * std::pow(lam, n + 1);
            w.p = z.p * std::pow(lam, n + 3);
            break;
        }
        case GenId::mass_translation:
            w.s += a;
            break;
    }
    return w;
}

Stencil finite_transform(const GeneratorGD& gen, double a, const Stencil& st) {
    // node/cell values move with the flow of the layer they live on
    auto low = [&](double s, double r, double u, double rho, double p) {
        return finite_transform(gen, a, GdPoint{st.t, s, r, u, rho, p});
    };
    auto up = [&](double s, double r, double u, double rho, double p) {
        return finite_transform(gen, a, GdPoint{st.t_hat, s, r, u, rho, p});
    };

    GdPoint c = low(st.s, st.r, st.u, st.rho, st.p);
    GdPoint cp = low(st.s_plus, st.r_plus, st.u_plus, st.rho, st.p);
    GdPoint cm = low(st.s_minus, st.r, st.u, st.rho_minus, st.p_minus);
    GdPoint h = up(st.s, st.r_hat, st.u_hat, st.rho_hat, st.p_hat);
    GdPoint hp = up(st.s_plus, st.r_hat_plus, st.u_hat_plus, st.rho_hat, st.p_hat);
    GdPoint hm = up(st.s_minus, st.r_hat, st.u_hat, st.rho_hat_minus, st.p_hat_minus);

    Stencil out = st;
    out.t = c.t;
    out.t_hat = h.t;
    out.s = c.s;
    out.s_plus = cp.s;
    out.s_minus = cm.s;
    out.u = c.u;
    out.u_plus = cp.u;
    out.u_hat = h.u;
    out.u_hat_plus = hp.u;
    out.r = c.r;
    out.r_plus = cp.r;
    out.r_hat = h.r;
    out.r_hat_plus = hp.r;
    out.rho = c.rho;
    out.rho_minus = cm.rho;
    out.rho_hat = h.rho;
    out.rho_hat_minus = hm.rho;
    out.p = c.p;
    out.p_minus = cm.p;
    out.p_hat = h.p;
    out.p_hat_minus = hm.p;
    return out;
}

void finite_transform(const GeneratorGD& gen, double a, FlowState& state, MassMesh& mesh) {
    const int N = state.n_cells();
    double t = mesh.t;
    // nodes
    for (int i = 0; i <= N; ++i) {
        GdPoint z{t, mesh.s[i], state.r[i], state.u[i], 1.0, 1.0};
        GdPoint w = finite_transform(gen, a, z);
        state.r[i] = w.r;
        state.u[i] = w.u;
    }
    // cells
    for (int i = 0; i < N; ++i) {
        GdPoint z{t, mesh.cell_center(i), 1.0, 0.0, state.rho[i], state.p[i]};
        GdPoint w = finite_transform(gen, a, z);
        state.rho[i] = w.rho;
        state.p[i] = w.p;
        state.eps[i] = specific_internal_energy(state.rho[i], state.p[i], gen.gas);
    }
    // mesh coordinates and the time level
    GdPoint z0{t, mesh.s[0], 1.0, 0.0, 1.0, 1.0};
    GdPoint z0h{t + mesh.tau, mesh.s[0], 1.0, 0.0, 1.0, 1.0};
    for (int i = 0; i <= N; ++i) {
        GdPoint w = finite_transform(gen, a, GdPoint{t, mesh.s[i], 1.0, 0.0, 1.0, 1.0});
        mesh.s[i] = w.s;
    }
    mesh.hs = mesh.s[1] - mesh.s[0];
    double t_new = finite_transform(gen, a, z0).t;
    double t_hat_new = finite_transform(gen, a, z0h).t;
    mesh.t = t_new;
    if (mesh.tau > 0.0) mesh.tau = t_hat_new - t_new;
}

GdPoint integrate_generator_flow(const GeneratorGD& gen, double a, const GdPoint& z,
                                 int n_steps) {
    // classic RK4 on dz/da = coefficients(z)
    auto rhs = [&](const GdPoint& w) {
        GdPoint d;
        d.t = gen.xi_t(w);
        d.s = gen.xi_s(w);
        d.r = gen.xi_r(w);
        d.u = gen.eta_u(w);
        d.rho = gen.eta_rho(w);
        d.p = gen.eta_p(w);
        return d;
    };
    auto axpy = [](const GdPoint& w, double c, const GdPoint& d) {
        return GdPoint{w.t + c * d.t, w.s + c * d.s, w.r + c * d.r,
                       w.u + c * d.u, w.rho + c * d.rho, w.p + c * d.p};
    };
    GdPoint w = z;
    double h = a / n_steps;
    for (int k = 0; k < n_steps; ++k) {
        GdPoint k1 = rhs(w);
        GdPoint k2 = rhs(axpy(w, 0.5 * h, k1));
        GdPoint k3 = rhs(axpy(w, 0.5 * h, k2));
        GdPoint k4 = rhs(axpy(w, h, k3));
        w = axpy(axpy(axpy(axpy(w, h / 6.0, k1), h / 3.0, k2), h / 3.0, k3), h / 6.0, k4);
    }
    return w;
}

bool mesh_orthogonality_criterion(const GeneratorGD& gen) {
    // D_{+h}(xi^t) + D_{+tau}(xi^x) on random lattice rectangles, where x is
    // the spatial mesh coordinate of the frame (s or r)
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> U(0.1, 2.0);
    for (int k = 0; k < 64; ++k) {
        double t = U(rng), tau = U(rng), x = U(rng), h = U(rng);
        auto coeff_t = [&](double tt, double xx) {
            GdPoint z{tt, xx, xx, 0.0, 1.0, 1.0};
            return gen.xi_t(z);
        };
        auto coeff_x = [&](double tt, double xx) {
            GdPoint z{tt, xx, xx, 0.0, 1.0, 1.0};
            return gen.frame == Frame::lagrangian ? gen.xi_s(z) : gen.xi_r(z);
        };
        double lhs = (coeff_t(t, x + h) - coeff_t(t, x)) / h;
        double rhs = (coeff_x(t + tau, x) - coeff_x(t, x)) / tau;
        if (std::abs(lhs + rhs) > 1e-12) return false;
    }
    return true;
}

}  // namespace lagflow
