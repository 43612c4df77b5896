#include "mmit/sweep.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "mmit/errors.hpp"

namespace mmit {

namespace {

// Runs fn(i) for i in [0, n) on contiguous chunks. If any call throws, the
// exception from the smallest failing index is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, n);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::size_t> failed_at(workers, n);

    auto work = [&](std::size_t w) {
        const std::size_t begin = n * w / workers, end = n * (w + 1) / workers;
        for (std::size_t i = begin; i < end; ++i) {
            try {
                fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
                failed_at[w] = i;
                return;
            }
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    const auto first = std::min_element(failed_at.begin(), failed_at.end());
    if (*first < n) std::rethrow_exception(errors[static_cast<std::size_t>(first - failed_at.begin())]);
}

}  // namespace

ResolvedParams resolve_params(const RunConfig& cfg) {
    if (const auto* raw = std::get_if<RawDriveParams>(&cfg.params)) {
        const SteadyState ss = solve_magnon_steady_state(*raw, cfg.solver);
        return {validate_params(effective_params(*raw, ss)), ss};
    }
    return {validate_params(std::get<SystemParams>(cfg.params)), std::nullopt};
}

std::vector<double> detuning_grid(const SweepSpec& s) {
    validate_sweep(s);
    std::vector<double> grid(static_cast<std::size_t>(s.n_points));
    const double span = s.delta_stop - s.delta_start;
    const double last = static_cast<double>(s.n_points - 1);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        grid[k] = s.delta_start + span * (static_cast<double>(k) / last);
    }
    grid.back() = s.delta_stop;
    return grid;
}

double SweepResult::max_residual() const noexcept {
    double m = 0.0;
    for (const auto& pt : points) m = std::max(m, pt.residual);
    return m;
}

std::vector<double> SweepResult::deltas() const {
    std::vector<double> d;
    d.reserve(points.size());
    for (const auto& pt : points) d.push_back(pt.delta);
    return d;
}

std::vector<double> SweepResult::absorption() const {
    std::vector<double> a;
    a.reserve(points.size());
    for (const auto& pt : points) a.push_back(pt.eps_out.real());
    return a;
}

SweepResult run_sweep(const ValidatedParams& p, const SweepSpec& s, int threads) {
    const std::vector<double> grid = detuning_grid(s);
    std::vector<ResponsePoint> points(grid.size());

    parallel_for(grid.size(), threads, [&](std::size_t k) {
        ResponsePoint& pt = points[k];
        pt.delta = grid[k];
        const CavityResponse r = cavity_amplitude(p, pt.delta, s.engine);
        pt.c_minus = r.c_minus;
        pt.residual = r.residual;
        pt.eps_out = output_field(pt.c_minus, p);
        pt.T = transmission(pt.c_minus, p);
        pt.T_sq = std::norm(pt.T);
        const GroupDelay g = group_delay(p, pt.delta, s.fd_step, s.engine);
        pt.tau = g.tau;
        pt.tau_step_too_large = g.step_too_large;
    });

    std::vector<cplx> t(points.size());
    std::transform(points.begin(), points.end(), t.begin(), [](const ResponsePoint& pt) { return pt.T; });
    const std::vector<double> phi = phase_profile(t);
    for (std::size_t k = 0; k < points.size(); ++k) points[k].phase = phi[k];

    return {ResolvedParams{p, std::nullopt}, s, std::move(points)};
}

SweepResult run_sweep(const RunConfig& cfg) {
    ResolvedParams rp = resolve_params(cfg);
    SweepResult r = run_sweep(rp.params, cfg.sweep, cfg.threads);
    r.resolved = std::move(rp);
    return r;
}

std::vector<TransparencyWindow> sweep_windows(const SweepResult& r) {
    const auto d = r.deltas();
    const auto a = r.absorption();
    return find_transparency_windows(d, a, r.sweep.prominence);
}

double relative_difference(cplx a, cplx b) noexcept {
    const double scale = std::abs(b);
    return scale == 0.0 ? std::abs(a) : std::abs(a - b) / scale;
}

namespace {

DiffSummary summarize(const std::vector<EngineDiff>& rows, double EngineDiff::*field) {
    DiffSummary s;
    for (const auto& r : rows) {
        s.max = std::max(s.max, r.*field);
        s.mean += r.*field;
    }
    if (!rows.empty()) s.mean /= static_cast<double>(rows.size());
    return s;
}

}  // namespace

ComparisonReport compare_engines(const ValidatedParams& p, const SweepSpec& s, int threads) {
    const std::vector<double> grid = detuning_grid(s);
    ComparisonReport rep;
    rep.rows.resize(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t k) {
        const double d = grid[k];
        const cplx oracle = cavity_amplitude(p, d, Engine::Oracle).c_minus;
        const cplx printed = cavity_amplitude(p, d, Engine::ClosedPrinted).c_minus;
        const cplx corrected = cavity_amplitude(p, d, Engine::ClosedCorrected).c_minus;
        rep.rows[k] = {d, relative_difference(printed, oracle), relative_difference(corrected, oracle),
                       relative_difference(printed, corrected)};
    });
    rep.printed_vs_oracle = summarize(rep.rows, &EngineDiff::printed_vs_oracle);
    rep.corrected_vs_oracle = summarize(rep.rows, &EngineDiff::corrected_vs_oracle);
    rep.printed_vs_corrected = summarize(rep.rows, &EngineDiff::printed_vs_corrected);
    return rep;
}

ComparisonReport compare_engines(const RunConfig& cfg) {
    return compare_engines(resolve_params(cfg).params, cfg.sweep, cfg.threads);
}

}  // namespace mmit
