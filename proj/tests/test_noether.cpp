#include <doctest.h>

#include <cmath>
#include <map>

#include "lagflow/errors.hpp"
#include "lagflow/noether_check.hpp"

using namespace lagflow;

TEST_SUITE_BEGIN("cl-catalog");

namespace {

struct NoetherCase {
    GasModel gas;
    EntropyProfile profile;
    double s_lo;
};

std::vector<NoetherCase> noether_cases() {
    return {
        {GasModel(0, 1.4), EntropyProfile::constant(1.0), 0.5},
        {GasModel(0, 3.0), EntropyProfile::constant(1.0), 0.5},
        {GasModel(1, 1.7), EntropyProfile::power(1.0, 2.0), 1.0},
        {GasModel(2, 1.4), EntropyProfile::exponential(1.0, 0.5), 0.5},
        {GasModel(1, 2.0), EntropyProfile::power(1.0, -3.0), 1.0},
        {GasModel(2, 5.0 / 3.0), EntropyProfile::constant(1.0), 0.5},
    };
}

// FD divergence of the hand-transcribed gas-variable densities against
// +-Q E: the calibration oracle of the sign table, independent of the
// Noether-machinery route that generates the potential-form densities.
double calibrate_sigma(const ConservationLaw& law, const EntropyProfile& profile,
                       double s_lo) {
    SmoothField field = random_test_field(90210, 0.0, 1.0, s_lo, s_lo + 1.0);
    auto grid = interior_grid(field, 3, 3);

    double worst_plus = 0.0, worst_minus = 0.0;
    for (auto [t, s] : grid) {
        PhiSample z = field.sample(t, s, profile);
        FieldJet j = field.jet(t, s);
        double E = euler_lagrange_residual(j, z.S, z.dS, law.gas);
        double QE = law.characteristic(z) * E;
        const double ht = 0.01, hs = 0.01;
        static const double w[7] = {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0,
                                    3.0 / 4,   -3.0 / 20, 1.0 / 60};
        double A = 0.0;
        for (int k = -3; k <= 3; ++k) {
            if (k == 0) continue;
            A += w[k + 3] *
                 law.Tt_gas(to_gas_sample(field.sample(t + k * ht, s, profile), law.gas)) / ht;
            A += w[k + 3] *
                 law.Ts_gas(to_gas_sample(field.sample(t, s + k * hs, profile), law.gas)) / hs;
        }
        worst_plus = std::max(worst_plus, std::abs(A - QE));
        worst_minus = std::max(worst_minus, std::abs(A + QE));
    }
    return worst_plus <= worst_minus ? 1.0 : -1.0;
}

}  // namespace

TEST_CASE("committed sigma table matches the calibration oracle") {
    std::map<LawId, double> committed = {
        {LawId::energy_general, -1.0},     {LawId::momentum_n0, 1.0},
        {LawId::center_of_mass_n0, -1.0},  {LawId::projective_1_gstar, 1.0},
        {LawId::projective_2_gstar, 1.0},  {LawId::isentropic_z2, 1.0},
        {LawId::isentropic_z3, 1.0},       {LawId::power_z2, 1.0},
        {LawId::power_zq, 1.0},            {LawId::exponential_z2, 1.0},
    };
    std::map<LawId, bool> seen;
    for (const auto& nc : noether_cases()) {
        for (const auto& law : catalog(nc.gas, nc.profile)) {
            if (law.sigma == 0.0) continue;
            CHECK(law.sigma == committed.at(law.id));
            double oracle = calibrate_sigma(law, nc.profile, nc.s_lo);
            CAPTURE(law.name);
            CHECK(law.sigma == oracle);
            seen[law.id] = true;
        }
    }
    CHECK(seen.size() == committed.size());
}

TEST_CASE("off-shell identity holds at FD accuracy while A is order one") {
    for (const auto& nc : noether_cases()) {
        for (const auto& law : catalog(nc.gas, nc.profile)) {
            double worst = 0.0, biggest_A = 0.0;
            for (int f = 0; f < 5; ++f) {
                SmoothField field = random_test_field(500u + 31u * f, 0.0, 1.0, nc.s_lo,
                                                       nc.s_lo + 1.0);
                auto grid = interior_grid(field, 4, 4);
                NoetherCheck chk = noether_identity_check(law, field, nc.profile, grid);
                worst = std::max(worst, chk.max_identity_residual);
                biggest_A = std::max(biggest_A, chk.max_divergence);
            }
            CAPTURE(law.name);
            CHECK(worst <= 1e-7);
            if (law.sigma != 0.0) CHECK(biggest_A >= 0.1);
        }
    }
}

TEST_CASE("energy identity on a perturbed cylindrical shell") {
    // phi = sqrt(2 s) is the static unit-density solution for n = 1 and
    // constant entropy; a time wobble takes it off shell while keeping it
    // closed-form
    GasModel cyl(1, 1.4);
    EntropyProfile iso = EntropyProfile::constant(1.0);
    SmoothField field;
    field.t_lo = 0.0;
    field.t_hi = 1.0;
    field.s_lo = 0.5;
    field.s_hi = 1.5;
    field.jet = [](double t, double s) {
        double base = std::sqrt(2.0 * s);
        double wob = 1.0 + 0.1 * std::sin(t);
        FieldJet j;
        j.phi = base * wob;
        j.phi_t = base * 0.1 * std::cos(t);
        j.phi_s = wob / base;
        j.phi_tt = -base * 0.1 * std::sin(t);
        j.phi_ts = 0.1 * std::cos(t) / base;
        j.phi_ss = -wob / (2.0 * s * base);
        return j;
    };

    // static shell first: the flow equation holds exactly
    SmoothField still = field;
    still.jet = [](double, double s) {
        double base = std::sqrt(2.0 * s);
        FieldJet j;
        j.phi = base;
        j.phi_s = 1.0 / base;
        j.phi_ss = -1.0 / (2.0 * s * base);
        return j;
    };
    CHECK(euler_lagrange_residual(still, cyl, iso, 0.3, 1.0) ==
          doctest::Approx(0.0).epsilon(1e-14));

    ConservationLaw energy = make_law(LawId::energy_general, cyl);
    auto grid = interior_grid(field, 4, 4);
    NoetherCheck chk = noether_identity_check(energy, field, iso, grid);
    CHECK(chk.max_identity_residual <= 1e-7);
    CHECK(chk.max_divergence >= 0.001);  // genuinely off shell
}

TEST_CASE("on-shell fields annihilate the divergence") {
    // static uniform slab: phi = s solves the flow equations for constant S
    GasModel slab(0, 1.4);
    EntropyProfile iso = EntropyProfile::constant(1.0);
    SmoothField still;
    still.t_lo = 0.0;
    still.t_hi = 1.0;
    still.s_lo = 0.5;
    still.s_hi = 1.5;
    still.jet = [](double, double s) { return FieldJet{s, 0.0, 1.0, 0.0, 0.0, 0.0}; };
    auto grid = interior_grid(still, 3, 3);
    for (const auto& law : catalog(slab, iso)) {
        NoetherCheck chk = noether_identity_check(law, still, iso, grid);
        CHECK(chk.max_divergence <= 1e-8);
    }
}

TEST_CASE("inapplicable law is rejected") {
    GasModel cyl(1, 1.4);
    EntropyProfile iso = EntropyProfile::constant(1.0);
    ConservationLaw momentum = make_law(LawId::momentum_n0, cyl);
    SmoothField field = random_test_field(7);
    auto grid = interior_grid(field, 2, 2);
    CHECK_THROWS_AS(noether_identity_check(momentum, field, iso, grid), applicability_error);

    SmoothField tiny = field;
    CHECK_THROWS_AS(
        noether_identity_check(make_law(LawId::energy_general, cyl), tiny, iso,
                               {{field.t_lo + 1e-4, 0.7}}),
        std::invalid_argument);
}

TEST_SUITE_END();
