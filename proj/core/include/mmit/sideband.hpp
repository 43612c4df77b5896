#pragma once

#include <array>
#include <cstddef>

#include "mmit/params.hpp"

namespace mmit {

inline constexpr std::size_t kSidebandDim = 7;

/// Unknown ordering x = (a₋, c₋, n₋, a₊*, c₊*, n₊*, q₋).
enum class Amp : std::size_t { a_minus, c_minus, n_minus, a_plus_conj, c_plus_conj, n_plus_conj, q_minus };

[[nodiscard]] constexpr std::size_t idx(Amp a) noexcept { return static_cast<std::size_t>(a); }

using SidebandMatrix = std::array<std::array<cplx, kSidebandDim>, kSidebandDim>;
using SidebandVector = std::array<cplx, kSidebandDim>;

/// Linear system for the first-order probe response at one detuning δ.
struct SidebandSystem {
    SidebandMatrix matrix{};
    SidebandVector rhs{};
    double delta = 0.0;
};

struct SidebandSolution {
    cplx a_minus, c_minus, n_minus;
    cplx a_plus_conj, c_plus_conj, n_plus_conj;
    cplx q_minus;  ///< q₊ = q₋* by construction
    double residual = 0.0;  ///< componentwise relative backward error

    [[nodiscard]] SidebandVector as_vector() const noexcept {
        return {a_minus, c_minus, n_minus, a_plus_conj, c_plus_conj, n_plus_conj, q_minus};
    }
};

/**
 * Linearised Langevin equations with the sideband ansatz
 * X = X₀ + X₋e^{−iδt} + X₊e^{iδt}, the e^{+iδt} rows conjugated and the
 * momentum eliminated (p₋ = −iδq₋/ω_b):
 *
 *   h1·a₋ + i g_N c₋                          = 0
 *   h3·c₋ + i g_N a₋ − (G_c/√2) q₋            = ε_p
 *   h5·n₋ + (G_n/√2) q₋                       = 0
 *   h2*·a₊* − i g_N c₊*                       = 0
 *   h4*·c₊* − i g_N a₊* − (G_c* /√2) q₋        = 0
 *   h6*·n₊* + (G_n* /√2) q₋                    = 0
 *   h7·q₋ − (iω_b/√2)(G_c* c₋ − G_c c₊* − G_n* n₋ + G_n n₊*) = 0
 *
 * with h1…h7 as in h_coefficients().
 */
[[nodiscard]] SidebandSystem assemble_sideband_system(const ValidatedParams& p, double delta);

/**
 * Dense complex Gaussian elimination with partial pivoting on the
 * row-equilibrated system. Throws SingularSystem(δ) when a pivot falls below
 * 1e-300. The reported residual is max_i |Ax−b|_i / (Σ_j|A_ij||x_j| + |b_i|).
 */
[[nodiscard]] SidebandSolution solve_sideband(const SidebandSystem& sys);

/// Componentwise relative backward error of x for the given system.
[[nodiscard]] double backward_error(const SidebandSystem& sys, const SidebandVector& x);

}  // namespace mmit
