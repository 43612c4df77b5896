#pragma once

#include <complex>
#include <numbers>

namespace mmit {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Ordinary frequency (Hz, the usual "ω/2π" quote) to angular frequency (rad/s).
[[nodiscard]] constexpr double hz_to_rad(double hz) noexcept { return kTwoPi * hz; }
[[nodiscard]] constexpr double rad_to_hz(double rad) noexcept { return rad / kTwoPi; }
[[nodiscard]] inline cplx hz_to_rad(cplx hz) noexcept { return kTwoPi * hz; }

/**
 * One physical configuration of the atom / cavity / magnon / phonon system in
 * the effective-coupling picture. All rates, detunings and couplings are
 * angular frequencies (rad/s).
 *
 * The effective couplings are complex in general (G_c = i√2 g_c c₀,
 * G_n = i√2 g_n n₀). `eps_p` only normalises the probe and may stay 1.
 */
struct SystemParams {
    double kappa_c = 0.0;      ///< cavity decay κ_c
    double kappa_n = 0.0;      ///< magnon decay κ_n
    double gamma_a = 0.0;      ///< atomic decay γ_a
    double gamma_b = 0.0;      ///< mechanical damping γ_b
    double omega_b = 0.0;      ///< mechanical frequency ω_b
    double delta_a = 0.0;      ///< Δ_a = ω_a − ω_L
    double delta_c_eff = 0.0;  ///< Δ̄_c = Δ_c − g_c q₀
    double delta_n_eff = 0.0;  ///< Δ̄_n = Δ_n + g_n q₀
    double g_N = 0.0;          ///< collective atom-cavity coupling g_a√N_a
    cplx G_c{0.0, 0.0};        ///< effective optomechanical coupling
    cplx G_n{0.0, 0.0};        ///< effective magnomechanical coupling
    double eps_p = 1.0;        ///< probe amplitude
};

/// SystemParams that passed validate_params(). Only constructible there.
class ValidatedParams {
public:
    [[nodiscard]] const SystemParams& get() const noexcept { return p_; }
    [[nodiscard]] const SystemParams* operator->() const noexcept { return &p_; }
    [[nodiscard]] const SystemParams& operator*() const noexcept { return p_; }

private:
    explicit ValidatedParams(const SystemParams& p) : p_(p) {}
    friend ValidatedParams validate_params(const SystemParams& raw);

    SystemParams p_;
};

/// Checks positivity of the five damping/frequency rates, g_N ≥ 0, and
/// finiteness of every field, in declaration order. Throws NonPositiveRate or
/// NonFiniteValue naming the first offending field.
[[nodiscard]] ValidatedParams validate_params(const SystemParams& raw);

/**
 * Bare-drive description for the steady-state consistency path. The magnon is
 * driven at Rabi frequency Ω_L; the cavity has no zero-order drive, so
 * c₀ = a₀ = 0 and only the magnon shifts the mechanics.
 */
struct RawDriveParams {
    double kappa_c = 0.0;
    double kappa_n = 0.0;
    double gamma_a = 0.0;
    double gamma_b = 0.0;
    double omega_b = 0.0;
    double delta_a = 0.0;
    double g_N = 0.0;
    double g_c_bare = 0.0;      ///< bare optomechanical coupling g_c
    double delta_c_bare = 0.0;  ///< Δ_c = ω_c − ω_L
    double g_n_bare = 0.0;      ///< bare magnomechanical coupling g_n
    double omega_L_rabi = 0.0;  ///< magnon drive Rabi frequency Ω_L
    double delta_n_bare = 0.0;  ///< Δ_n = ω_n − ω_L
    double eps_p = 1.0;
};

/// Same checks as validate_params for the shared fields, plus Ω_L ≥ 0 and
/// finiteness of the bare couplings and detunings.
void validate_raw(const RawDriveParams& raw);

namespace presets {

/**
 * Operating point of the double-MMIT study: κ_n/2π = 1 MHz, κ_c = 2κ_n,
 * γ_a = κ_n, γ_b/2π = 100 Hz, ω_b/2π = 40 MHz, g_N/2π = 8 MHz, Δ_a = −ω_b,
 * Δ̄_c = 0.5ω_b, Δ̄_n = ω_b, G_n/2π = 5.6 MHz, with G_c/2π given in Hz.
 */
[[nodiscard]] SystemParams reference(double G_c_hz = 4.0e6);

}  // namespace presets

}  // namespace mmit
