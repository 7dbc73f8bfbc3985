#include "lagflow/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lagflow {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_snapshot(const std::string& path, const FlowState& state, const MassMesh& mesh,
                    const GasModel& gas) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << "i,s [mass],r [length],u [length/time],rho [mass/volume],p [pressure],"
         "eps [energy/mass],S [p rho^-gamma]\n";
    const int N = state.n_cells();
    for (int i = 0; i <= N; ++i) {
        f << i << ',' << format_full(mesh.s[i]) << ',' << format_full(state.r[i]) << ','
          << format_full(state.u[i]);
        if (i < N) {
            f << ',' << format_full(state.rho[i]) << ',' << format_full(state.p[i]) << ','
              << format_full(state.eps[i]) << ','
              << format_full(entropy_variable(state.rho[i], state.p[i], gas));
        } else {
            f << ",,,,";
        }
        f << '\n';
    }
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open snapshot: " + path);
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error("empty snapshot: " + path);

    std::vector<double> s, r, u, rho, p, eps;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<std::string> cols;
        while (std::getline(row, cell, ',')) cols.push_back(cell);
        if (cols.size() < 4) throw std::runtime_error("malformed snapshot row: " + line);
        s.push_back(std::stod(cols[1]));
        r.push_back(std::stod(cols[2]));
        u.push_back(std::stod(cols[3]));
        if (cols.size() >= 8 && !cols[4].empty()) {
            rho.push_back(std::stod(cols[4]));
            p.push_back(std::stod(cols[5]));
            eps.push_back(std::stod(cols[6]));
        }
    }
    if (rho.size() + 1 != r.size())
        throw std::runtime_error("snapshot cell/node count mismatch: " + path);

    Snapshot snap;
    auto to_array = [](const std::vector<double>& v) {
        return Eigen::Map<const Eigen::ArrayXd>(v.data(), static_cast<Eigen::Index>(v.size()))
            .eval();
    };
    snap.s = to_array(s);
    snap.state.r = to_array(r);
    snap.state.u = to_array(u);
    snap.state.rho = to_array(rho);
    snap.state.p = to_array(p);
    snap.state.eps = to_array(eps);
    return snap;
}

}  // namespace lagflow
