#include <cmath>

#include <doctest.h>

#include "mmit/errors.hpp"
#include "mmit/sideband.hpp"
#include "oracles.hpp"

using namespace mmit;

namespace {

SystemParams decoupled() {
    SystemParams p = presets::reference();
    p.G_c = 0.0;
    p.G_n = 0.0;
    p.g_N = 0.0;
    return p;
}

cplx c_minus(const SystemParams& p, double delta) {
    return solve_sideband(assemble_sideband_system(validate_params(p), delta)).c_minus;
}

}  // namespace

TEST_CASE("decoupled couplings give a block-diagonal system with c- = eps_p / h3") {
    const SystemParams p = decoupled();
    const double delta = 0.8 * p.omega_b;
    const SidebandSystem sys = assemble_sideband_system(validate_params(p), delta);
    for (std::size_t r = 0; r < kSidebandDim; ++r) {
        for (std::size_t c = 0; c < kSidebandDim; ++c) {
            if (r != c) CHECK(sys.matrix[r][c] == cplx{});
        }
    }
    int nonzero = 0;
    for (const auto& v : sys.rhs) nonzero += v != cplx{};
    CHECK(nonzero == 1);
    CHECK(sys.rhs[idx(Amp::c_minus)] == cplx{p.eps_p});

    const cplx h3(p.kappa_c, p.delta_c_eff - delta);
    CHECK(testing::rel(solve_sideband(sys).c_minus, p.eps_p / h3) <= 1e-12);
}

TEST_CASE("identity system") {
    SidebandSystem sys;
    for (std::size_t k = 0; k < kSidebandDim; ++k) sys.matrix[k][k] = 1.0;
    sys.rhs[idx(Amp::c_minus)] = 2.5;
    const SidebandSolution s = solve_sideband(sys);
    CHECK(s.c_minus == cplx{2.5});
    CHECK(s.a_minus == cplx{});
    CHECK(s.residual == 0.0);
}

TEST_CASE("G_c = 0: atoms-only dressing, eliminated by hand") {
    SystemParams p = presets::reference(0.0);
    for (double x = 0.0; x <= 2.0; x += 0.05) {
        const double delta = x * p.omega_b;
        CHECK(testing::rel(c_minus(p, delta), testing::cavity_atoms_only(p, delta)) <= 1e-12);
    }
}

TEST_CASE("G_c = 0: c- independent of G_n, gamma_b, omega_b") {
    const SystemParams base = presets::reference(0.0);
    for (double x : {0.5, 0.9, 1.0, 1.1, 1.5}) {
        const double delta = x * base.omega_b;
        const cplx ref = c_minus(base, delta);
        SystemParams p = base;
        p.G_n *= 10.0;
        CHECK(testing::rel(c_minus(p, delta), ref) <= 1e-12);
        p = base;
        p.gamma_b *= 10.0;
        CHECK(testing::rel(c_minus(p, delta), ref) <= 1e-12);
        p = base;
        p.omega_b *= 10.0;
        CHECK(testing::rel(c_minus(p, delta), ref) <= 1e-12);
    }
}

TEST_CASE("g_N = 0, G_n = 0: standard optomechanical response") {
    SystemParams p = presets::reference(4e6);
    p.g_N = 0.0;
    p.G_n = 0.0;
    for (double x = 0.5; x <= 1.5; x += 0.01) {
        const double delta = x * p.omega_b;
        CHECK(testing::rel(c_minus(p, delta), testing::cavity_optomechanics_only(p, delta)) <= 1e-10);
    }
    // Complex coupling phase must not matter.
    p.G_c = std::polar(std::abs(p.G_c), 0.7);
    for (double x : {0.9, 1.0, 1.02}) {
        const double delta = x * p.omega_b;
        CHECK(testing::rel(c_minus(p, delta), testing::cavity_optomechanics_only(p, delta)) <= 1e-10);
    }
}

TEST_CASE("G_c = 0, g_N = 0: magnon-phonon block reproduces the two-mode magnomechanical response") {
    SystemParams p = presets::reference(0.0);
    p.g_N = 0.0;
    p.G_n = std::polar(std::abs(p.G_n), -0.4);
    const ValidatedParams v = validate_params(p);
    for (double x = 0.8; x <= 1.2; x += 0.005) {
        const double delta = x * p.omega_b;
        SidebandSystem sys = assemble_sideband_system(v, delta);
        sys.rhs = {};
        sys.rhs[idx(Amp::n_minus)] = 1.0;
        const SidebandSolution s = solve_sideband(sys);
        const auto [n_ref, q_ref] = testing::magnon_phonon_only(p, delta, 1.0);
        CHECK(testing::rel(s.n_minus, n_ref) <= 1e-10);
        CHECK(testing::rel(s.q_minus, q_ref) <= 1e-10);
        CHECK(s.c_minus == cplx{});
    }
}

TEST_CASE("linearity in the probe amplitude") {
    SystemParams p = presets::reference(4e6);
    const double delta = 1.02 * p.omega_b;
    const SidebandVector x1 = solve_sideband(assemble_sideband_system(validate_params(p), delta)).as_vector();
    for (double lambda : {2.0, 10.0}) {
        SystemParams q = p;
        q.eps_p *= lambda;
        const SidebandVector xl = solve_sideband(assemble_sideband_system(validate_params(q), delta)).as_vector();
        for (std::size_t k = 0; k < kSidebandDim; ++k) CHECK(testing::rel(xl[k], lambda * x1[k]) <= 1e-12);
    }
}

TEST_CASE("reference preset at delta = omega_b solves with small residual") {
    const SystemParams p = presets::reference(4e6);
    const SidebandSystem sys = assemble_sideband_system(validate_params(p), p.omega_b);
    const SidebandSolution s = solve_sideband(sys);
    CHECK(s.residual <= 1e-10);
    CHECK(backward_error(sys, s.as_vector()) == s.residual);
    CHECK(s.q_minus != cplx{});
}

TEST_CASE("reference preset: 2001-point sweep in [0.5, 1.5] omega_b all solve to 1e-10") {
    const ValidatedParams v = validate_params(presets::reference(4e6));
    double worst = 0.0;
    for (int k = 0; k < 2001; ++k) {
        const double delta = v->omega_b * (0.5 + k / 2000.0);
        worst = std::max(worst, solve_sideband(assemble_sideband_system(v, delta)).residual);
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("reference preset is nonsingular on [0, 2] omega_b") {
    for (double gc : {0.0, 4e6, 8e6}) {
        const ValidatedParams v = validate_params(presets::reference(gc));
        for (int k = 0; k <= 400; ++k) {
            const double delta = v->omega_b * (k / 200.0);
            CHECK_NOTHROW((void)solve_sideband(assemble_sideband_system(v, delta)));
        }
    }
}

TEST_CASE("exactly singular system is reported") {
    SidebandSystem sys;
    for (std::size_t k = 0; k < kSidebandDim; ++k) sys.matrix[k][k] = 1.0;
    sys.matrix[3][3] = 0.0;
    sys.matrix[3][4] = 0.0;
    sys.delta = 1.5;
    sys.rhs[idx(Amp::c_minus)] = 1.0;
    try {
        (void)solve_sideband(sys);
        FAIL("expected SingularSystem");
    } catch (const SingularSystem& e) {
        CHECK(e.delta() == 1.5);
        CHECK(e.exit_code() == ExitCode::SingularOrPole);
    }

    // Rank-deficient without a zero row.
    SidebandSystem dep;
    for (std::size_t k = 0; k < kSidebandDim; ++k) dep.matrix[k][k] = 1.0;
    dep.matrix[1] = dep.matrix[0];
    dep.rhs[0] = 1.0;
    CHECK_THROWS_AS((void)solve_sideband(dep), SingularSystem);
}
