#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "mmit/report.hpp"
#include "mmit/sweep.hpp"
#include "oracles.hpp"

using namespace mmit;

namespace {

SweepSpec spec_for(const ValidatedParams& v, int n) {
    SweepSpec s = default_sweep(v->omega_b);
    s.n_points = n;
    return s;
}

std::string csv(const SweepResult& r) {
    std::ostringstream os;
    write_spectrum_csv(os, r);
    return os.str();
}

}  // namespace

TEST_CASE("three-point decoupled sweep: middle row is the bare cavity") {
    SystemParams p = presets::reference(0.0);
    p.G_n = 0.0;
    p.g_N = 0.0;
    const ValidatedParams v = validate_params(p);
    SweepSpec s = spec_for(v, 3);
    s.delta_start = p.delta_c_eff - p.omega_b;
    s.delta_stop = p.delta_c_eff + p.omega_b;
    const SweepResult r = run_sweep(v, s);
    REQUIRE(r.points.size() == 3);
    CHECK(r.points[1].delta == doctest::Approx(p.delta_c_eff));
    CHECK(testing::rel(r.points[1].eps_out, cplx{2.0}) <= 1e-12);
    CHECK(testing::rel(r.points[1].T, cplx{-1.0}) <= 1e-12);
}

TEST_CASE("grid is strictly increasing and hits both ends") {
    SweepSpec s;
    s.delta_start = 1.0;
    s.delta_stop = 2.0;
    s.n_points = 7;
    s.fd_step = 1e-6;
    const auto g = detuning_grid(s);
    REQUIRE(g.size() == 7);
    CHECK(g.front() == 1.0);
    CHECK(g.back() == 2.0);
    for (std::size_t k = 1; k < g.size(); ++k) CHECK(g[k] > g[k - 1]);
}

TEST_CASE("thread count does not change the output") {
    const ValidatedParams v = validate_params(presets::reference(4e6));
    const SweepSpec s = spec_for(v, 301);
    const std::string one = csv(run_sweep(v, s, 1));
    CHECK(csv(run_sweep(v, s, 4)) == one);
    CHECK(csv(run_sweep(v, s, 1)) == one);
}

TEST_CASE("csv schema and row count") {
    const ValidatedParams v = validate_params(presets::reference(4e6));
    const SweepResult r = run_sweep(v, spec_for(v, 51));
    std::istringstream in(csv(r));
    std::string line;
    std::getline(in, line);
    CHECK(line == kSpectrumHeader);
    int rows = 0;
    double prev = -1e300;
    while (std::getline(in, line)) {
        ++rows;
        const double d = std::stod(line.substr(0, line.find(',')));
        CHECK(d > prev);
        prev = d;
        CHECK(std::count(line.begin(), line.end(), ',') == 7);
    }
    CHECK(rows == 51);
}

TEST_CASE("json mirrors the rows and echoes parameters") {
    const ValidatedParams v = validate_params(presets::reference(4e6));
    const SweepResult r = run_sweep(v, spec_for(v, 5));
    std::ostringstream os;
    write_spectrum_json(os, r);
    const auto j = nlohmann::json::parse(os.str());
    REQUIRE(j["rows"].size() == 5);
    CHECK(j["rows"][2]["eps_R"].get<double>() == r.points[2].eps_out.real());
    CHECK(j["rows"][2]["tau_s"].get<double>() == r.points[2].tau);
    CHECK(j["meta"]["params"]["omega_b"].get<double>() == v->omega_b);
    CHECK(j["meta"]["sweep"]["engine"] == "oracle");
}

TEST_CASE("engines agree with each other where they should") {
    SUBCASE("all couplings zero: three engines to 1e-12") {
        SystemParams p = presets::reference(0.0);
        p.G_n = 0.0;
        p.g_N = 0.0;
        const ValidatedParams v = validate_params(p);
        const ComparisonReport rep = compare_engines(v, spec_for(v, 401), 2);
        CHECK(rep.printed_vs_oracle.max <= 1e-12);
        CHECK(rep.corrected_vs_oracle.max <= 1e-12);
        CHECK(rep.printed_vs_corrected.max <= 1e-12);
    }
    SUBCASE("G_c = 0: printed and corrected identical, both match oracle") {
        const ValidatedParams v = validate_params(presets::reference(0.0));
        const ComparisonReport rep = compare_engines(v, spec_for(v, 2001), 2);
        CHECK(rep.printed_vs_corrected.max == 0.0);
        CHECK(rep.printed_vs_oracle.max <= 1e-8);
        CHECK(rep.corrected_vs_oracle.max <= 1e-8);
    }
    SUBCASE("G_c/2pi = 4 MHz: corrected matches, printed deviation reported") {
        const ValidatedParams v = validate_params(presets::reference(4e6));
        const ComparisonReport rep = compare_engines(v, spec_for(v, 2001), 2);
        CHECK(rep.corrected_vs_oracle.max <= 1e-10);
        CHECK(rep.rows.size() == 2001);
        MESSAGE("printed vs oracle: max " << rep.printed_vs_oracle.max << " mean " << rep.printed_vs_oracle.mean);
    }
}

TEST_CASE("closed_corrected sweep matches oracle sweep") {
    const ValidatedParams v = validate_params(presets::reference(4e6));
    SweepSpec s = spec_for(v, 2001);
    const SweepResult a = run_sweep(v, s, 2);
    s.engine = Engine::ClosedCorrected;
    const SweepResult b = run_sweep(v, s, 2);
    double worst = 0.0;
    for (std::size_t k = 0; k < a.points.size(); ++k) {
        worst = std::max(worst, testing::rel(b.points[k].c_minus, a.points[k].c_minus));
    }
    CHECK(worst <= 1e-10);
    CHECK(b.max_residual() == 0.0);
    CHECK(a.max_residual() <= 1e-10);
}

TEST_CASE("raw-drive config resolves through the steady state") {
    RunConfig cfg = parse_config(R"(
kappa_n = 1e6
kappa_c = 2e6
gamma_a = 1e6
gamma_b = 100
omega_b = 40e6
g_N = 8e6
delta_a = -40e6
g_c_bare = 1
delta_c_bare = 20e6
g_n_bare = 1
omega_L_rabi = 1e14
delta_n_bare = 40e6
n_points = 11
)");
    const SweepResult r = run_sweep(cfg);
    REQUIRE(r.resolved.steady_state.has_value());
    CHECK(r.points.size() == 11);
    CHECK(r.resolved.params->G_c == cplx{});
    CHECK(std::abs(r.resolved.params->G_n) > 0.0);
}

TEST_CASE("relative difference") {
    CHECK(relative_difference(cplx{1.0}, cplx{1.0}) == 0.0);
    CHECK(relative_difference(cplx{2.0}, cplx{1.0}) == 1.0);
    CHECK(relative_difference(cplx{0.5}, cplx{}) == 0.5);
}
