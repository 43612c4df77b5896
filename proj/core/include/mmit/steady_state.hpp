#pragma once

#include <utility>

#include "mmit/params.hpp"

namespace mmit {

/// Zero-order (mean-field) solution around which the probe response is
/// linearised.
struct SteadyState {
    cplx a0{};
    cplx c0{};
    cplx n0{};
    double q0 = 0.0;
    double delta_c_eff = 0.0;
    double delta_n_eff = 0.0;
    double residual = 0.0;       ///< |q₀ω_b + g_n|n₀|² − g_c|c₀|²|
    int iterations = 0;
    bool multiple_roots = false; ///< the cubic in g_n q₀ has three real roots
};

struct FixedPointOptions {
    double tol = 1e-12;
    int max_iter = 10000;
    double damping = 0.5;  ///< α in q ← (1−α)q + α·F(q)
};

/**
 * Magnon / mechanics fixed point with no zero-order cavity field:
 *   n₀ = Ω_L / (κ_n + i(Δ_n + g_n q₀)),   q₀ = −g_n|n₀|²/ω_b.
 * Solved by damped Picard iteration until
 *   |q₀ω_b + g_n|n₀|²| ≤ tol·ω_b·|q₀|  (so also ≤ tol·ω_b·max(1, |q₀|)).
 * Throws NoConvergence after max_iter sweeps. The bistability flag is set
 * from the discriminant of the equivalent cubic; the iterated root is kept.
 */
[[nodiscard]] SteadyState solve_magnon_steady_state(const RawDriveParams& p,
                                                    const FixedPointOptions& opts = {});

/// G_c = i√2·g_c·c₀, G_n = i√2·g_n·n₀.
[[nodiscard]] std::pair<cplx, cplx> effective_couplings(double g_c, cplx c0, double g_n, cplx n0);

/// Effective-coupling parameters implied by a raw drive and its steady state.
[[nodiscard]] SystemParams effective_params(const RawDriveParams& raw, const SteadyState& ss);

}  // namespace mmit
