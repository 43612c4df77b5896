#include "mmit/steady_state.hpp"

#include <algorithm>
#include <cmath>

#include "mmit/errors.hpp"

namespace mmit {

namespace {

cplx magnon_amplitude(const RawDriveParams& p, double q0) {
    return p.omega_L_rabi / cplx(p.kappa_n, p.delta_n_bare + p.g_n_bare * q0);
}

double fixed_point_residual(const RawDriveParams& p, double q0, cplx n0) {
    return std::abs(q0 * p.omega_b + p.g_n_bare * std::norm(n0));
}

// Three distinct real roots of u³ + 2D u² + (1 + D²) u + k with u = g_n q₀/κ_n.
bool cubic_has_three_real_roots(const RawDriveParams& p) {
    using ld = long double;
    const ld kap = p.kappa_n;
    const ld D = p.delta_n_bare / kap;
    const ld k = static_cast<ld>(p.g_n_bare) * p.g_n_bare * p.omega_L_rabi * p.omega_L_rabi /
                 (static_cast<ld>(p.omega_b) * kap * kap * kap);
    const ld a = 1, b = 2 * D, c = 1 + D * D, d = k;
    const ld disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
                    27 * a * a * d * d;
    return disc > 0;
}

}  // namespace

SteadyState solve_magnon_steady_state(const RawDriveParams& p, const FixedPointOptions& opts) {
    validate_raw(p);
    if (!(opts.tol > 0.0) || opts.max_iter < 1 || !(opts.damping > 0.0 && opts.damping <= 1.0)) {
        throw ConfigError("InvalidSolverOptions", "tol>0, max_iter>=1, 0<damping<=1 required");
    }

    const double alpha = opts.damping;
    double q0 = 0.0;
    cplx n0 = magnon_amplitude(p, q0);
    double residual = fixed_point_residual(p, q0, n0);
    int it = 0;
    // Relative to q0, which also meets the looser max(1, |q0|) bound.
    auto converged = [&] { return residual <= opts.tol * p.omega_b * std::abs(q0); };

    while (!converged()) {
        if (it >= opts.max_iter) throw NoConvergence(it, residual);
        const double target = -p.g_n_bare * std::norm(n0) / p.omega_b;
        q0 = (1.0 - alpha) * q0 + alpha * target;
        n0 = magnon_amplitude(p, q0);
        residual = fixed_point_residual(p, q0, n0);
        ++it;
    }

    SteadyState ss;
    ss.n0 = n0;
    ss.q0 = q0;
    ss.delta_n_eff = p.delta_n_bare + p.g_n_bare * q0;
    ss.delta_c_eff = p.delta_c_bare - p.g_c_bare * q0;
    ss.residual = residual;
    ss.iterations = it;
    ss.multiple_roots = cubic_has_three_real_roots(p);
    return ss;
}

std::pair<cplx, cplx> effective_couplings(double g_c, cplx c0, double g_n, cplx n0) {
    const cplx i_sqrt2(0.0, std::numbers::sqrt2);
    return {i_sqrt2 * g_c * c0, i_sqrt2 * g_n * n0};
}

SystemParams effective_params(const RawDriveParams& raw, const SteadyState& ss) {
    const auto [G_c, G_n] = effective_couplings(raw.g_c_bare, ss.c0, raw.g_n_bare, ss.n0);
    SystemParams p;
    p.kappa_c = raw.kappa_c;
    p.kappa_n = raw.kappa_n;
    p.gamma_a = raw.gamma_a;
    p.gamma_b = raw.gamma_b;
    p.omega_b = raw.omega_b;
    p.delta_a = raw.delta_a;
    p.delta_c_eff = ss.delta_c_eff;
    p.delta_n_eff = ss.delta_n_eff;
    p.g_N = raw.g_N;
    p.G_c = G_c;
    p.G_n = G_n;
    p.eps_p = raw.eps_p;
    return p;
}

}  // namespace mmit
