#pragma once

#include <string_view>

#include "mmit/params.hpp"

namespace mmit {

/// Per-detuning linewidth / detuning factors of the closed-form response.
struct HCoefficients {
    cplx h1, h2, h3, h4, h5, h6, h7, h8;
};

/**
 * h1 = γ_a + i(Δ_a − δ),   h2 = γ_a + i(Δ_a + δ),
 * h3 = κ_c + i(Δ̄_c − δ),   h4 = κ_c + i(Δ̄_c + δ),
 * h5 = κ_n + i(Δ̄_n − δ),   h6 = κ_n + i(Δ̄_n + δ),
 * h7 = ω_b² − δ² − iγ_bδ,  h8 = ω_b² − δ² + iγ_bδ.
 */
[[nodiscard]] HCoefficients h_coefficients(const ValidatedParams& p, double delta);

/// Which 𝓗-cascade to evaluate.
///  - Printed: the published definitions, verbatim.
///  - Corrected: obtained by eliminating a±, n± and c₊* from the sideband
///    system; agrees with solve_sideband to rounding.
enum class CascadeVariant { Printed, Corrected };

[[nodiscard]] std::string_view to_string(CascadeVariant v) noexcept;

struct ScriptHCoefficients {
    cplx H1, H2, H3, H4, H5, H6;
    CascadeVariant variant = CascadeVariant::Printed;
};

/**
 * Printed:
 *   𝓗1 = 1 + g_N²/(h2h4)
 *   𝓗2 = i h8* − ω_b(G_c²/(2𝓗1*h4*) + G_n²/(2h6*))
 *   𝓗3 = −ω_b G_n²/(2h5) − i h7
 *   𝓗4 = ω_b(G_c²/(h4*𝓗1) + G_n²/(2h6*))
 *   𝓗5 = 𝓗3 − ω_b G_n² 𝓗4/(2h5𝓗2)
 *   𝓗6 = ω_b (G_c/√2)(1 + 𝓗4/𝓗2)
 *
 * Corrected (same 𝓗1; 𝓗2 ≡ 1 is unused):
 *   𝓗3 = −ω_b|G_n|²/(2h5) − i h7
 *   𝓗4 = (ω_b/2)(|G_c|²/(h4*𝓗1*) + |G_n|²/h6*)
 *   𝓗5 = 𝓗3 + 𝓗4
 *   𝓗6 = ω_b G_c* /√2
 *
 * In both, q₋/c₋ = 𝓗6/𝓗5. Throws PoleEncountered when a divisor is below
 * 1e-30 of its dividend.
 */
[[nodiscard]] ScriptHCoefficients script_h_coefficients(const HCoefficients& h, const ValidatedParams& p,
                                                        CascadeVariant variant, double delta);

/// c₋ = ε_p / (h3 + g_N²/h1 − (G_c/√2)(𝓗6/𝓗5)).
[[nodiscard]] cplx cavity_amplitude_closed_form(const ValidatedParams& p, double delta, CascadeVariant variant);

}  // namespace mmit
