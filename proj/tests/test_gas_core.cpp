#include <doctest.h>

#include <cmath>
#include <random>

#include "lagflow/entropy_profile.hpp"
#include "lagflow/flow_state.hpp"
#include "lagflow/gas_model.hpp"

using namespace lagflow;

TEST_SUITE_BEGIN("gas-core");

TEST_CASE("gamma_star per geometry") {
    CHECK(GasModel(0, 1.4).gamma_star() == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(GasModel(1, 1.4).gamma_star() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(GasModel(2, 1.4).gamma_star() == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(GasModel(3, 1.4), std::domain_error);
    CHECK_THROWS_AS(GasModel(0, 1.0), std::domain_error);
}

TEST_CASE("specific internal energy") {
    CHECK(specific_internal_energy(1.0, 1.0, GasModel(0, 1.4)) == doctest::Approx(2.5));
    CHECK(specific_internal_energy(2.0, 0.0, GasModel(0, 3.0)) == 0.0);
    CHECK(specific_internal_energy(0.5, 3.0, GasModel(0, 3.0)) == doctest::Approx(3.0));
    CHECK_THROWS_AS(specific_internal_energy(0.0, 1.0, GasModel(0, 1.4)), std::domain_error);
    CHECK_THROWS_AS(specific_internal_energy(1.0, -1.0, GasModel(0, 1.4)), std::domain_error);
}

TEST_CASE("entropy variable") {
    CHECK(entropy_variable(1.0, 1.0, GasModel(0, 1.7)) == doctest::Approx(1.0));
    CHECK(entropy_variable(2.0, 8.0, GasModel(0, 3.0)) == doctest::Approx(1.0));
    CHECK(entropy_variable(2.0, 4.0, GasModel(1, 2.0)) == doctest::Approx(1.0));
    CHECK_THROWS_AS(entropy_variable(0.0, 1.0, GasModel(0, 1.4)), std::domain_error);
}

TEST_CASE("entropy profiles evaluate with derivatives") {
    auto [Sp, dSp] = EntropyProfile::power(1.0, 2.0).eval(3.0);
    CHECK(Sp == doctest::Approx(9.0).epsilon(1e-14));
    CHECK(dSp == doctest::Approx(6.0).epsilon(1e-14));

    auto [Sc, dSc] = EntropyProfile::constant(5.0).eval(123.4);
    CHECK(Sc == 5.0);
    CHECK(dSc == 0.0);

    auto [Se, dSe] = EntropyProfile::exponential(1.0, 1.0).eval(0.0);
    CHECK(Se == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dSe == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("closed forms match at random points") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(0.2, 3.0);
    EntropyProfile pw = EntropyProfile::power(0.7, -1.3);
    EntropyProfile ex = EntropyProfile::exponential(1.2, 0.4);
    for (int k = 0; k < 100; ++k) {
        double s = U(rng);
        auto [S1, d1] = pw.eval(s);
        CHECK(S1 == doctest::Approx(0.7 * std::pow(s, -1.3)).epsilon(1e-14));
        CHECK(d1 == doctest::Approx(-1.3 * 0.7 * std::pow(s, -2.3)).epsilon(1e-14));
        auto [S2, d2] = ex.eval(s);
        CHECK(S2 == doctest::Approx(1.2 * std::exp(0.4 * s)).epsilon(1e-14));
        CHECK(d2 == doctest::Approx(0.4 * 1.2 * std::exp(0.4 * s)).epsilon(1e-14));
    }
}

TEST_CASE("classifying equation residuals") {
    std::vector<double> samples{0.5, 1.0, 1.5, 2.0};
    CHECK(check_classifying_equation(EntropyProfile::power(1.0, 1.7), 1.0, 0.0, 1.7, samples) ==
          doctest::Approx(0.0).epsilon(1e-13));
    CHECK(check_classifying_equation(EntropyProfile::exponential(1.0, -0.6), 0.0, 1.0, -0.6,
                                     samples) == doctest::Approx(0.0).epsilon(1e-13));

    // S = s^2 + 1 tabulated: (1)(2s)s != 2(s^2+1) at s = 1
    std::vector<double> ss, SS;
    for (int k = 0; k <= 200; ++k) {
        double s = 0.25 + 2.0 * k / 200.0;
        ss.push_back(s);
        SS.push_back(s * s + 1.0);
    }
    EntropyProfile tab = EntropyProfile::tabulated(ss, SS);
    double res = check_classifying_equation(tab, 1.0, 0.0, 2.0, {1.0});
    CHECK(res > 0.1);
    CHECK_THROWS_AS(check_classifying_equation(tab, 1.0, 0.0, 2.0, {}), std::invalid_argument);
    CHECK_THROWS_AS(tab.eval(100.0), std::out_of_range);
}

TEST_CASE("tabulated interpolation is C1 and accurate") {
    std::vector<double> ss, SS;
    for (int k = 0; k <= 64; ++k) {
        double s = k / 64.0;
        ss.push_back(s);
        SS.push_back(2.0 + std::sin(s));
    }
    EntropyProfile tab = EntropyProfile::tabulated(ss, SS);
    for (double s : {0.1234, 0.5, 0.777, 0.99}) {
        auto [S, dS] = tab.eval(s);
        CHECK(S == doctest::Approx(2.0 + std::sin(s)).epsilon(1e-6));
        CHECK(dS == doctest::Approx(std::cos(s)).epsilon(1e-3));
    }
}

TEST_CASE("init_state node recursion") {
    GasModel plane(0, 1.4);
    MassMesh mesh = MassMesh::uniform(10, 0.0, 1.0);
    InitialData uniform{[](double) { return 1.0; }, [](double) { return 0.0; },
                        [](double) { return 1.0; }};
    FlowState st = init_state(uniform, mesh, plane, 0.0);
    for (int i = 0; i <= 10; ++i) CHECK(st.r[i] == doctest::Approx(0.1 * i).epsilon(1e-14));

    GasModel sphere(2, 5.0 / 3.0);
    MassMesh one = MassMesh::uniform(1, 0.0, 1.0 / 3.0);
    FlowState st2 = init_state(uniform, one, sphere, 0.0);
    CHECK(st2.r[1] == doctest::Approx(1.0).epsilon(1e-14));

    GasModel cyl(1, 2.0);
    MassMesh one2 = MassMesh::uniform(1, 0.0, 1.0);
    InitialData dense{[](double) { return 2.0; }, [](double) { return 0.0; },
                      [](double) { return 1.0; }};
    FlowState st3 = init_state(dense, one2, cyl, 1.0);
    CHECK(st3.r[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    InitialData bad{[](double) { return -1.0; }, [](double) { return 0.0; },
                    [](double) { return 1.0; }};
    CHECK_THROWS_AS(init_state(bad, mesh, plane, 0.0), std::domain_error);
}

TEST_CASE("cell-mass identity holds exactly after init") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0.5, 2.0);
    for (int n = 0; n <= 2; ++n) {
        GasModel gas(n, 1.4);
        MassMesh mesh = MassMesh::uniform(64, 0.0, 1.0);
        double a = U(rng), b = U(rng);
        InitialData d{[=](double s) { return a + 0.4 * std::sin(5.0 * s + b); },
                      [](double) { return 0.0; },
                      [=](double s) { return b + 0.3 * std::cos(3.0 * s); }};
        FlowState st = init_state(d, mesh, gas, n >= 1 ? 0.0 : 0.25);
        CHECK(cell_mass_defect(st, mesh, gas) <= 1e-13);
    }
}

TEST_CASE("eos roundtrip through the entropy variable") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> U(0.3, 2.5);
    GasModel gas(1, 1.66);
    for (int k = 0; k < 50; ++k) {
        double rho = U(rng), S = U(rng);
        double p = S * std::pow(rho, gas.gamma);
        double lhs = specific_internal_energy(rho, p, gas) * (gas.gamma - 1.0) * rho;
        CHECK(lhs == doctest::Approx(p).epsilon(1e-14));
        CHECK(entropy_variable(rho, p, gas) == doctest::Approx(S).epsilon(1e-13));
    }
}

TEST_SUITE_END();
