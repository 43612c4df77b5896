#include "mmit/response.hpp"

#include <cmath>
#include <numbers>

#include "mmit/errors.hpp"
#include "mmit/sideband.hpp"

namespace mmit {

std::string_view to_string(Engine e) noexcept {
    switch (e) {
        case Engine::Oracle: return "oracle";
        case Engine::ClosedPrinted: return "closed_printed";
        case Engine::ClosedCorrected: return "closed_corrected";
    }
    return "unknown";
}

std::optional<Engine> parse_engine(std::string_view name) noexcept {
    if (name == "oracle") return Engine::Oracle;
    if (name == "closed_printed") return Engine::ClosedPrinted;
    if (name == "closed_corrected") return Engine::ClosedCorrected;
    return std::nullopt;
}

CavityResponse cavity_amplitude(const ValidatedParams& p, double delta, Engine engine) {
    switch (engine) {
        case Engine::Oracle: {
            const SidebandSolution s = solve_sideband(assemble_sideband_system(p, delta));
            return {s.c_minus, s.residual};
        }
        case Engine::ClosedPrinted:
            return {cavity_amplitude_closed_form(p, delta, CascadeVariant::Printed), 0.0};
        case Engine::ClosedCorrected:
            return {cavity_amplitude_closed_form(p, delta, CascadeVariant::Corrected), 0.0};
    }
    return {};
}

cplx output_field(cplx c_minus, const ValidatedParams& p) noexcept {
    return 2.0 * p->kappa_c * c_minus / p->eps_p;
}

cplx transmission(cplx c_minus, const ValidatedParams& p) noexcept {
    return 1.0 - output_field(c_minus, p);
}

std::vector<double> phase_profile(std::span<const cplx> t) {
    constexpr double pi = std::numbers::pi;
    std::vector<double> phi;
    phi.reserve(t.size());
    double offset = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
        const double raw = std::arg(t[k]);
        if (k > 0) {
            const double prev_raw = std::arg(t[k - 1]);
            const double jump = raw - prev_raw;
            if (std::abs(std::abs(jump) - pi) < 1e-9) throw UnwrapAmbiguity(k);
            if (jump > pi) offset -= 2.0 * pi;
            else if (jump < -pi) offset += 2.0 * pi;
        }
        phi.push_back(raw + offset);
    }
    return phi;
}

namespace {

double delay_estimate(const ValidatedParams& p, double delta, double step, Engine engine, cplx t0) {
    const cplx tp = transmission(cavity_amplitude(p, delta + step, engine).c_minus, p);
    const cplx tm = transmission(cavity_amplitude(p, delta - step, engine).c_minus, p);
    return std::imag((tp - tm) / (2.0 * step) / t0);
}

}  // namespace

GroupDelay group_delay(const ValidatedParams& p, double delta, double fd_step, Engine engine) {
    if (!(fd_step > 0.0) || !std::isfinite(fd_step)) throw ConfigError("InvalidStep", "fd_step must be > 0");
    const cplx t0 = transmission(cavity_amplitude(p, delta, engine).c_minus, p);
    GroupDelay g;
    g.tau = delay_estimate(p, delta, fd_step, engine, t0);
    g.tau_half = delay_estimate(p, delta, 0.5 * fd_step, engine, t0);
    g.step_too_large = std::abs(g.tau - g.tau_half) > kDelayHalvingTol * std::abs(g.tau_half) + kDelayAbsFloor;
    return g;
}

}  // namespace mmit
