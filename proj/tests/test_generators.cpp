#include <doctest.h>

#include <cmath>
#include <random>

#include "lagflow/errors.hpp"
#include "lagflow/generators.hpp"
#include "lagflow/presets.hpp"

using namespace lagflow;

TEST_SUITE_BEGIN("symmetry");

TEST_CASE("closed-form flows match numeric integration of the generators") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0.3, 1.5);
    for (Frame frame : {Frame::lagrangian, Frame::eulerian}) {
        for (int n : {0, 1, 2}) {
            GasModel gas(n, (n + 3.0) / (n + 1.0));  // admits the projective flow too
            for (const auto& gen : admitted_generators(frame, gas)) {
                for (int k = 0; k < 10; ++k) {
                    GdPoint z{0.2 * U(rng), U(rng), U(rng), U(rng) - 0.9, U(rng), U(rng)};
                    double a = (gen.id == GenId::projective) ? 0.5 : 0.8;
                    GdPoint exact = finite_transform(gen, a, z);
                    GdPoint numeric = integrate_generator_flow(gen, a, z);
                    CHECK(exact.t == doctest::Approx(numeric.t).epsilon(1e-9));
                    CHECK(exact.s == doctest::Approx(numeric.s).epsilon(1e-9));
                    CHECK(exact.r == doctest::Approx(numeric.r).epsilon(1e-9));
                    CHECK(exact.u == doctest::Approx(numeric.u).epsilon(1e-9));
                    CHECK(exact.rho == doctest::Approx(numeric.rho).epsilon(1e-9));
                    CHECK(exact.p == doctest::Approx(numeric.p).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("time translation moves only time") {
    GasModel gas(1, 1.4);
    GeneratorGD gen = make_generator(GenId::time_translation, Frame::lagrangian, gas);
    GdPoint z{0.3, 1.0, 2.0, -0.5, 1.2, 0.8};
    GdPoint w = finite_transform(gen, 5.0, z);
    CHECK(w.t == doctest::Approx(5.3));
    CHECK(w.s == z.s);
    CHECK(w.r == z.r);
    CHECK(w.u == z.u);
    CHECK(w.rho == z.rho);
    CHECK(w.p == z.p);
}

TEST_CASE("galilean boost shifts velocity and advects positions") {
    GasModel gas(0, 1.4);
    GeneratorGD gen = make_generator(GenId::galilean, Frame::lagrangian, gas);
    MassMesh mesh = MassMesh::uniform(4, 0.0, 1.0, 0.0, 0.0);
    InitialData d{[](double) { return 1.0; }, [](double) { return 0.0; },
                  [](double) { return 1.0; }};
    FlowState st = init_state(d, mesh, gas, 0.0);
    FlowState boosted = st;
    MassMesh m2 = mesh;
    finite_transform(gen, 2.0, boosted, m2);
    for (int i = 0; i <= 4; ++i) {
        CHECK(boosted.u[i] == doctest::Approx(2.0));
        CHECK(boosted.r[i] == doctest::Approx(st.r[i]));  // t = 0: no advection yet
    }
    CHECK(boosted.rho.isApprox(st.rho));
    CHECK(boosted.p.isApprox(st.p));
}

TEST_CASE("projective flow at t = 0 tilts velocity by a r") {
    GasModel gas(1, 2.0);
    GeneratorGD gen = make_generator(GenId::projective, Frame::lagrangian, gas);
    GdPoint z{0.0, 0.7, 1.4, 0.3, 1.1, 0.9};
    double a = 0.25;
    GdPoint w = finite_transform(gen, a, z);
    CHECK(w.t == 0.0);
    CHECK(w.r == doctest::Approx(1.4));
    CHECK(w.u == doctest::Approx(0.3 + a * 1.4));
    CHECK(w.rho == doctest::Approx(1.1));
    CHECK(w.p == doctest::Approx(0.9));

    GdPoint far{5.0, 0.7, 1.4, 0.3, 1.1, 0.9};
    CHECK_THROWS_AS(finite_transform(gen, 0.25, far), std::domain_error);
}

TEST_CASE("mesh orthogonality criterion verdicts") {
    GasModel slab(0, 1.4), slab3(0, 3.0);
    CHECK_FALSE(mesh_orthogonality_criterion(
        make_generator(GenId::galilean, Frame::eulerian, slab)));
    CHECK_FALSE(mesh_orthogonality_criterion(
        make_generator(GenId::projective, Frame::eulerian, slab3)));
    CHECK(mesh_orthogonality_criterion(
        make_generator(GenId::galilean, Frame::lagrangian, slab)));
    CHECK(mesh_orthogonality_criterion(
        make_generator(GenId::time_translation, Frame::eulerian, slab)));
    for (GenId id : {GenId::time_translation, GenId::dilation_rt, GenId::dilation_rho,
                     GenId::dilation_p, GenId::space_translation, GenId::projective,
                     GenId::mass_translation}) {
        GasModel gas = (id == GenId::projective) ? slab3 : slab;
        CHECK(mesh_orthogonality_criterion(make_generator(id, Frame::lagrangian, gas)));
    }
}

TEST_CASE("eulerian frame has no mass translation") {
    CHECK_THROWS_AS(make_generator(GenId::mass_translation, Frame::eulerian, GasModel(0, 1.4)),
                    applicability_error);
}

TEST_SUITE_END();
