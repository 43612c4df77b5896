#pragma once

#include <iosfwd>
#include <span>
#include <string_view>

#include "mmit/steady_state.hpp"
#include "mmit/sweep.hpp"

namespace mmit {

/// Column order of the spectrum table.
inline constexpr std::string_view kSpectrumHeader = "delta_rad_s,eps_R,eps_I,T_re,T_im,T_sq,phase_rad,tau_s";

/// Numbers are printed with 17 significant digits so files round-trip and
/// repeat byte for byte.
void write_spectrum_csv(std::ostream& os, const SweepResult& r);

/// One object per row with the CSV fields, plus a `meta` block echoing the
/// resolved parameters (rad/s) and the sweep.
void write_spectrum_json(std::ostream& os, const SweepResult& r);

void write_comparison_csv(std::ostream& os, const ComparisonReport& rep);
void write_comparison_summary_json(std::ostream& os, const ComparisonReport& rep);

void write_windows_csv(std::ostream& os, std::span<const TransparencyWindow> windows);
void write_windows_json(std::ostream& os, std::span<const TransparencyWindow> windows, const SweepResult& r);

void write_steady_state(std::ostream& os, const SteadyState& ss, const SystemParams& effective, bool json);

}  // namespace mmit
