#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mmit/cascade.hpp"
#include "mmit/params.hpp"

namespace mmit {

/// How c₋ is obtained at each detuning.
enum class Engine { Oracle, ClosedPrinted, ClosedCorrected };

[[nodiscard]] std::string_view to_string(Engine e) noexcept;
[[nodiscard]] std::optional<Engine> parse_engine(std::string_view name) noexcept;

struct CavityResponse {
    cplx c_minus{};
    double residual = 0.0;  ///< oracle backward error; 0 for the closed forms
};

/// c₋(δ) from the 7×7 sideband solve or from one of the closed-form cascades.
[[nodiscard]] CavityResponse cavity_amplitude(const ValidatedParams& p, double delta, Engine engine);

/// ε_out = 2κ_c c₋/ε_p. Re is the absorption, Im the dispersion.
[[nodiscard]] cplx output_field(cplx c_minus, const ValidatedParams& p) noexcept;

/// T = (ε_p − 2κ_c c₋)/ε_p = 1 − ε_out.
[[nodiscard]] cplx transmission(cplx c_minus, const ValidatedParams& p) noexcept;

/// Unwrapped Arg T along an ordered δ grid. Throws UnwrapAmbiguity(i) when the
/// raw jump between samples i−1 and i is within 1e-9 of ±π.
[[nodiscard]] std::vector<double> phase_profile(std::span<const cplx> transmission_values);

struct GroupDelay {
    double tau = 0.0;       ///< seconds; > 0 slow light, < 0 fast light
    double tau_half = 0.0;  ///< same estimate with the step halved
    bool step_too_large = false;
};

/// Relative step-halving tolerance on τ.
inline constexpr double kDelayHalvingTol = 0.01;
/// Absolute floor (s) below which τ differences are round-off, not truncation.
inline constexpr double kDelayAbsFloor = 1e-16;

/**
 * τ = Im[(1/T)·(T(δ+s) − T(δ−s))/(2s)], with ∂/∂ω_p = ∂/∂δ at fixed drive.
 * Evaluated at s and s/2; `step_too_large` is set when the two disagree by
 * more than 1% (plus kDelayAbsFloor).
 */
[[nodiscard]] GroupDelay group_delay(const ValidatedParams& p, double delta, double fd_step,
                                     Engine engine = Engine::Oracle);

/// Observables at one detuning.
struct ResponsePoint {
    double delta = 0.0;
    cplx c_minus{};
    cplx eps_out{};
    cplx T{};
    double T_sq = 0.0;
    double phase = 0.0;  ///< unwrapped along the sweep
    double tau = 0.0;
    bool tau_step_too_large = false;
    double residual = 0.0;
};

}  // namespace mmit
