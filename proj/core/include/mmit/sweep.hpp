#pragma once

#include <optional>
#include <vector>

#include "mmit/config.hpp"
#include "mmit/response.hpp"
#include "mmit/steady_state.hpp"
#include "mmit/windows.hpp"

namespace mmit {

/// Effective parameters for a run, with the steady state when they came
/// from a raw drive.
struct ResolvedParams {
    ValidatedParams params;
    std::optional<SteadyState> steady_state;
};

[[nodiscard]] ResolvedParams resolve_params(const RunConfig& cfg);

/// Uniform grid delta_start … delta_stop, both ends included.
[[nodiscard]] std::vector<double> detuning_grid(const SweepSpec& s);

struct SweepResult {
    ResolvedParams resolved;
    SweepSpec sweep;
    std::vector<ResponsePoint> points;  ///< ordered by δ

    [[nodiscard]] double max_residual() const noexcept;
    [[nodiscard]] std::vector<double> deltas() const;
    [[nodiscard]] std::vector<double> absorption() const;
};

/**
 * Evaluates every grid point with the sweep's engine on up to `threads`
 * workers, then unwraps the phase in δ order. Output is independent of the
 * thread count. A SingularSystem / PoleEncountered at several points is
 * reported for the smallest δ.
 */
[[nodiscard]] SweepResult run_sweep(const ValidatedParams& p, const SweepSpec& s, int threads = 1);
[[nodiscard]] SweepResult run_sweep(const RunConfig& cfg);

[[nodiscard]] std::vector<TransparencyWindow> sweep_windows(const SweepResult& r);

/// Relative c₋ differences between the three engines at one δ.
struct EngineDiff {
    double delta = 0.0;
    double printed_vs_oracle = 0.0;
    double corrected_vs_oracle = 0.0;
    double printed_vs_corrected = 0.0;
};

struct DiffSummary {
    double max = 0.0;
    double mean = 0.0;
};

struct ComparisonReport {
    std::vector<EngineDiff> rows;
    DiffSummary printed_vs_oracle;
    DiffSummary corrected_vs_oracle;
    DiffSummary printed_vs_corrected;
};

/// |a − b| / |b|, or |a| when b is exactly zero.
[[nodiscard]] double relative_difference(cplx a, cplx b) noexcept;

[[nodiscard]] ComparisonReport compare_engines(const ValidatedParams& p, const SweepSpec& s, int threads = 1);
[[nodiscard]] ComparisonReport compare_engines(const RunConfig& cfg);

}  // namespace mmit
