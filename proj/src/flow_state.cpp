#include "lagflow/flow_state.hpp"

#include <cmath>
#include <stdexcept>

namespace lagflow {

MassMesh MassMesh::uniform(int n_cells, double s_min, double s_max, double t0, double tau0) {
    if (n_cells < 1) throw std::invalid_argument("MassMesh: need at least one cell");
    if (!(s_max > s_min)) throw std::invalid_argument("MassMesh: need s_max > s_min");
    MassMesh m;
    m.s = Eigen::ArrayXd::LinSpaced(n_cells + 1, s_min, s_max);
    m.hs = (s_max - s_min) / n_cells;
    m.t = t0;
    m.tau = tau0;
    return m;
}

void MassMesh::validate() const {
    if (s.size() < 2) throw std::domain_error("MassMesh: fewer than two nodes");
    if (!(hs > 0.0)) throw std::domain_error("MassMesh: hs must be > 0");
    for (int i = 0; i + 1 < s.size(); ++i) {
        double d = s[i + 1] - s[i];
        if (std::abs(d - hs) > 1e-12 * hs)
            throw std::domain_error("MassMesh: spacing not uniform to 1e-12");
    }
}

void FlowState::validate(const GasModel& gas) const {
    const int n = n_cells();
    if (r.size() != n + 1 || u.size() != n + 1 || p.size() != n || eps.size() != n)
        throw std::domain_error("FlowState: inconsistent array sizes");
    for (int i = 0; i < n; ++i) {
        if (!(rho[i] > 0.0)) throw std::domain_error("FlowState: rho must be > 0");
        if (!(p[i] > 0.0)) throw std::domain_error("FlowState: p must be > 0");
    }
    for (int i = 0; i < n; ++i)
        if (!(r[i + 1] > r[i])) throw std::domain_error("FlowState: r must be strictly increasing");
    if (gas.n >= 1 && r[0] < 0.0) throw std::domain_error("FlowState: r must be >= 0 for n >= 1");
}

FlowState init_state(const InitialData& data, const MassMesh& mesh, const GasModel& gas,
                     double r_origin) {
    mesh.validate();
    if (gas.n >= 1 && r_origin < 0.0)
        throw std::domain_error("init_state: r_origin must be >= 0 for n >= 1");

    const int N = mesh.n_cells();
    const int np1 = gas.n + 1;
    FlowState st;
    st.r.resize(N + 1);
    st.u.resize(N + 1);
    st.rho.resize(N);
    st.p.resize(N);
    st.eps.resize(N);

    for (int i = 0; i <= N; ++i) st.u[i] = data.u(mesh.s[i]);
    for (int i = 0; i < N; ++i) {
        double sc = mesh.cell_center(i);
        st.rho[i] = data.rho(sc);
        st.p[i] = data.p(sc);
        if (!(st.rho[i] > 0.0)) throw std::domain_error("init_state: preset rho must be > 0");
        if (!(st.p[i] > 0.0)) throw std::domain_error("init_state: preset p must be > 0");
        st.eps[i] = specific_internal_energy(st.rho[i], st.p[i], gas);
    }

    st.r[0] = r_origin;
    double rp = std::pow(r_origin, np1);
    for (int i = 0; i < N; ++i) {
        rp += np1 * mesh.hs / st.rho[i];
        st.r[i + 1] = (np1 == 1) ? rp : std::pow(rp, 1.0 / np1);
    }
    st.validate(gas);
    return st;
}

double cell_mass_defect(const FlowState& state, const MassMesh& mesh, const GasModel& gas) {
    const int N = state.n_cells();
    const int np1 = gas.n + 1;
    double worst = 0.0;
    for (int i = 0; i < N; ++i) {
        double vol = (std::pow(state.r[i + 1], np1) - std::pow(state.r[i], np1)) / np1;
        worst = std::max(worst, std::abs(state.rho[i] * vol - mesh.hs) / mesh.hs);
    }
    return worst;
}

}  // namespace lagflow
