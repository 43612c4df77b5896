#include <cmath>
#include <limits>

#include <doctest.h>

#include "mmit/errors.hpp"
#include "mmit/params.hpp"

using namespace mmit;

TEST_CASE("reference preset is accepted") {
    const SystemParams p = presets::reference();
    const ValidatedParams v = validate_params(p);
    CHECK(v->kappa_c == doctest::Approx(2.0 * v->kappa_n));
    CHECK(v->delta_a == -v->omega_b);
    CHECK(v->delta_c_eff == doctest::Approx(0.5 * v->omega_b));
    CHECK(v->omega_b == doctest::Approx(kTwoPi * 40e6));
    CHECK(v->g_N == doctest::Approx(kTwoPi * 8e6));
    CHECK(v->gamma_b == doctest::Approx(kTwoPi * 100.0));
    CHECK(v->G_n.real() == doctest::Approx(kTwoPi * 5.6e6));
}

TEST_CASE("zero cavity decay is rejected") {
    SystemParams p = presets::reference();
    p.kappa_c = 0.0;
    try {
        (void)validate_params(p);
        FAIL("expected NonPositiveRate");
    } catch (const NonPositiveRate& e) {
        CHECK(e.field() == "kappa_c");
        CHECK(e.kind() == "NonPositiveRate");
    }
}

TEST_CASE("NaN mechanical frequency is rejected as non-finite") {
    SystemParams p = presets::reference();
    p.omega_b = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((void)validate_params(p), NonFiniteValue);
    try {
        (void)validate_params(p);
    } catch (const NonFiniteValue& e) {
        CHECK(e.field() == "omega_b");
    }
}

TEST_CASE("first violated field is reported") {
    SystemParams p = presets::reference();
    p.gamma_a = -1.0;
    p.gamma_b = 0.0;
    try {
        (void)validate_params(p);
        FAIL("expected throw");
    } catch (const ParamError& e) {
        CHECK(e.field() == "gamma_a");
    }

    p = presets::reference();
    p.G_n = {0.0, std::numeric_limits<double>::infinity()};
    CHECK_THROWS_AS((void)validate_params(p), NonFiniteValue);

    p = presets::reference();
    p.g_N = -1.0;
    CHECK_THROWS_AS((void)validate_params(p), NonPositiveRate);
}

TEST_CASE("raw drive validation") {
    RawDriveParams r;
    r.kappa_c = r.kappa_n = r.gamma_a = r.gamma_b = r.omega_b = 1.0;
    validate_raw(r);
    r.omega_L_rabi = -1.0;
    CHECK_THROWS_AS(validate_raw(r), NonPositiveRate);
}

TEST_CASE("unit conversion") {
    CHECK(hz_to_rad(1.0) == doctest::Approx(2.0 * M_PI));
    CHECK(rad_to_hz(hz_to_rad(123.0)) == doctest::Approx(123.0));
}
