#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "mmit/params.hpp"
#include "mmit/response.hpp"
#include "mmit/steady_state.hpp"

namespace mmit {

enum class OutputFormat { Csv, Json };

/// Detuning grid and numerical knobs for one sweep. Angular units.
struct SweepSpec {
    double delta_start = 0.0;
    double delta_stop = 0.0;
    int n_points = 2001;
    double fd_step = 0.0;
    double prominence = 0.05;
    Engine engine = Engine::Oracle;
};

/// Default grid: δ/ω_b ∈ [0.5, 1.5], 2001 points, fd step 1e-6·ω_b.
[[nodiscard]] SweepSpec default_sweep(double omega_b);

/// Throws ConfigError unless start < stop, n_points ≥ 3, fd_step > 0 and
/// prominence ∈ (0, 1).
void validate_sweep(const SweepSpec& s);

struct RunConfig {
    std::variant<SystemParams, RawDriveParams> params;
    SweepSpec sweep;
    FixedPointOptions solver;
    std::string output;  ///< empty → stdout
    OutputFormat format = OutputFormat::Csv;
    int threads = 1;

    [[nodiscard]] bool raw_mode() const noexcept { return std::holds_alternative<RawDriveParams>(params); }
    [[nodiscard]] double omega_b() const noexcept;
};

/**
 * Plain-text `key = value` configuration. `#` starts a comment. Frequencies
 * are ordinary frequencies in Hz (the value quoted as ω/2π) and are converted
 * to rad/s on load; complex couplings are written `re+imj`, `imj` or `re`.
 *
 * Required in every file: kappa_c kappa_n gamma_a gamma_b omega_b delta_a g_N.
 * Effective mode adds: delta_c_eff delta_n_eff G_c G_n.
 * Raw-drive mode adds: g_c_bare delta_c_bare g_n_bare omega_L_rabi delta_n_bare.
 * Optional: eps_p, delta_start, delta_stop, fd_step (Hz), n_points,
 * prominence, engine, solver_tol, max_iter, output, format, threads.
 *
 * Throws ParseError(line), MissingField(name), ConflictingModes, or a
 * ParamError from validation.
 */
[[nodiscard]] RunConfig parse_config(std::string_view text);
[[nodiscard]] RunConfig load_config(const std::filesystem::path& path);

/// Parses `re+imj` / `re-imj` / `imj` / `re`.
[[nodiscard]] std::optional<cplx> parse_complex(std::string_view s);

[[nodiscard]] std::optional<OutputFormat> parse_format(std::string_view s) noexcept;

}  // namespace mmit
