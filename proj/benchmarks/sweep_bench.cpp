#include <benchmark/benchmark.h>

#include "mmit/steady_state.hpp"
#include "mmit/sweep.hpp"

using namespace mmit;

namespace {

void BM_Sweep(benchmark::State& state) {
    const auto engine = static_cast<Engine>(state.range(0));
    const ValidatedParams v = validate_params(presets::reference(4e6));
    SweepSpec s = default_sweep(v->omega_b);
    s.engine = engine;
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(v, s, 1));
    state.SetLabel(std::string(to_string(engine)));
    state.SetItemsProcessed(state.iterations() * s.n_points);
}
BENCHMARK(BM_Sweep)
    ->Arg(static_cast<int>(Engine::Oracle))
    ->Arg(static_cast<int>(Engine::ClosedPrinted))
    ->Arg(static_cast<int>(Engine::ClosedCorrected))
    ->Unit(benchmark::kMillisecond);

void BM_Point(benchmark::State& state) {
    const auto engine = static_cast<Engine>(state.range(0));
    const ValidatedParams v = validate_params(presets::reference(4e6));
    for (auto _ : state) benchmark::DoNotOptimize(cavity_amplitude(v, v->omega_b, engine));
    state.SetLabel(std::string(to_string(engine)));
}
BENCHMARK(BM_Point)
    ->Arg(static_cast<int>(Engine::Oracle))
    ->Arg(static_cast<int>(Engine::ClosedPrinted))
    ->Arg(static_cast<int>(Engine::ClosedCorrected));

void BM_SteadyState(benchmark::State& state) {
    const SystemParams p = presets::reference();
    RawDriveParams r;
    r.kappa_c = p.kappa_c;
    r.kappa_n = p.kappa_n;
    r.gamma_a = p.gamma_a;
    r.gamma_b = p.gamma_b;
    r.omega_b = p.omega_b;
    r.delta_a = p.delta_a;
    r.g_N = p.g_N;
    r.g_c_bare = hz_to_rad(1.0);
    r.delta_c_bare = p.delta_c_eff;
    r.g_n_bare = hz_to_rad(1.0);
    r.delta_n_bare = p.delta_n_eff;
    r.omega_L_rabi = 1e14;
    for (auto _ : state) benchmark::DoNotOptimize(solve_magnon_steady_state(r));
}
BENCHMARK(BM_SteadyState);

}  // namespace

BENCHMARK_MAIN();
