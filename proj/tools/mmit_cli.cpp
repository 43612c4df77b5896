// mmit: probe-response spectra of the atom / cavity / magnon / phonon system.
//
//   mmit spectrum     --config reference.preset [--engine ...] [--gc Hz] [--out f.csv]
//   mmit delay        --config reference.preset --at 2.28e8 --at 2.69e8
//   mmit steady-state --config raw_drive.preset
//   mmit windows      --config reference.preset
//   mmit compare      --config reference.preset --out compare.csv

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmit/config.hpp"
#include "mmit/errors.hpp"
#include "mmit/report.hpp"
#include "mmit/steady_state.hpp"
#include "mmit/sweep.hpp"

namespace {

struct CommonOptions {
    std::string config;
    std::string engine;
    std::string gc;
    std::string gn;
    int points = 0;
    std::string out;
    std::string format;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--config", o.config, "key = value parameter file (Hz)")->required()->check(CLI::ExistingFile);
    cmd->add_option("--engine", o.engine, "oracle | closed_printed | closed_corrected");
    cmd->add_option("--gc", o.gc, "override G_c/2π in Hz (re+imj accepted)");
    cmd->add_option("--gn", o.gn, "override G_n/2π in Hz (re+imj accepted)");
    cmd->add_option("--points", o.points, "number of detuning points (>= 3)");
    cmd->add_option("--out", o.out, "output path (default: stdout)");
    cmd->add_option("--format", o.format, "csv | json");
    cmd->add_option("--threads", o.threads, "worker threads for the sweep");
}

mmit::cplx complex_flag(const std::string& flag, const std::string& text) {
    const auto v = mmit::parse_complex(text);
    if (!v) throw mmit::ConfigError("ParseError", "flag=" + flag + " value=" + text);
    return *v;
}

mmit::RunConfig resolve_config(const CommonOptions& o) {
    mmit::RunConfig cfg = mmit::load_config(o.config);
    if (!o.gc.empty() || !o.gn.empty()) {
        auto* p = std::get_if<mmit::SystemParams>(&cfg.params);
        if (p == nullptr) throw mmit::ConflictingModes("--gc/--gn given for a raw-drive config");
        if (!o.gc.empty()) p->G_c = mmit::hz_to_rad(complex_flag("--gc", o.gc));
        if (!o.gn.empty()) p->G_n = mmit::hz_to_rad(complex_flag("--gn", o.gn));
        (void)mmit::validate_params(*p);
    }
    if (!o.engine.empty()) {
        const auto e = mmit::parse_engine(o.engine);
        if (!e) throw mmit::ConfigError("ParseError", "flag=--engine value=" + o.engine);
        cfg.sweep.engine = *e;
    }
    if (o.points != 0) cfg.sweep.n_points = o.points;
    if (!o.out.empty()) cfg.output = o.out;
    if (!o.format.empty()) {
        const auto f = mmit::parse_format(o.format);
        if (!f) throw mmit::ConfigError("ParseError", "flag=--format value=" + o.format);
        cfg.format = *f;
    }
    if (o.threads != 0) cfg.threads = o.threads;
    if (cfg.threads < 1) throw mmit::ConfigError("InvalidThreads", "threads >= 1 required");
    mmit::validate_sweep(cfg.sweep);
    return cfg;
}

// Writes through `fn` to cfg.output, or stdout when it is empty.
template <typename Fn>
void emit(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mmit::ConfigError("OutputError", "path=" + path);
    fn(out);
}

void cmd_spectrum(const CommonOptions& o) {
    const mmit::RunConfig cfg = resolve_config(o);
    const mmit::SweepResult r = mmit::run_sweep(cfg);
    emit(cfg.output, [&](std::ostream& os) {
        if (cfg.format == mmit::OutputFormat::Json) mmit::write_spectrum_json(os, r);
        else mmit::write_spectrum_csv(os, r);
    });
}

void cmd_delay(const CommonOptions& o, const std::vector<double>& at) {
    const mmit::RunConfig cfg = resolve_config(o);
    if (at.empty()) {
        cmd_spectrum(o);
        return;
    }
    const mmit::ResolvedParams rp = mmit::resolve_params(cfg);
    emit(cfg.output, [&](std::ostream& os) {
        os << "delta_rad_s,tau_s,tau_half_step_s,step_too_large\n";
        for (const double d : at) {
            const mmit::GroupDelay g = mmit::group_delay(rp.params, d, cfg.sweep.fd_step, cfg.sweep.engine);
            char buf[128];
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%s\n", d, g.tau, g.tau_half,
                          g.step_too_large ? "true" : "false");
            os << buf;
        }
    });
}

void cmd_steady_state(const CommonOptions& o) {
    const mmit::RunConfig cfg = resolve_config(o);
    const auto* raw = std::get_if<mmit::RawDriveParams>(&cfg.params);
    if (raw == nullptr) throw mmit::MissingField("omega_L_rabi");
    const mmit::SteadyState ss = mmit::solve_magnon_steady_state(*raw, cfg.solver);
    const mmit::SystemParams eff = mmit::effective_params(*raw, ss);
    emit(cfg.output, [&](std::ostream& os) {
        mmit::write_steady_state(os, ss, eff, cfg.format == mmit::OutputFormat::Json);
    });
}

void cmd_windows(const CommonOptions& o) {
    const mmit::RunConfig cfg = resolve_config(o);
    const mmit::SweepResult r = mmit::run_sweep(cfg);
    const auto w = mmit::sweep_windows(r);
    emit(cfg.output, [&](std::ostream& os) {
        if (cfg.format == mmit::OutputFormat::Json) mmit::write_windows_json(os, w, r);
        else mmit::write_windows_csv(os, w);
    });
}

void cmd_compare(const CommonOptions& o) {
    const mmit::RunConfig cfg = resolve_config(o);
    const mmit::ComparisonReport rep = mmit::compare_engines(cfg);
    emit(cfg.output, [&](std::ostream& os) { mmit::write_comparison_csv(os, rep); });
    if (!cfg.output.empty()) {
        emit(cfg.output + ".summary.json", [&](std::ostream& os) { mmit::write_comparison_summary_json(os, rep); });
    }
    mmit::write_comparison_summary_json(cfg.output.empty() ? std::cerr : std::cout, rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Probe-field response of an atom-opto-magnomechanical cavity"};
    app.require_subcommand(1);

    CommonOptions spectrum_o, delay_o, steady_o, windows_o, compare_o;
    std::vector<double> delay_at;

    auto* spectrum = app.add_subcommand("spectrum", "absorption, dispersion, transmission, phase, delay vs detuning");
    add_common(spectrum, spectrum_o);
    auto* delay = app.add_subcommand("delay", "group delay, at --at points or over the whole sweep");
    add_common(delay, delay_o);
    delay->add_option("--at", delay_at, "probe detuning in rad/s (repeatable)");
    auto* steady = app.add_subcommand("steady-state", "magnon/mechanics fixed point of a raw-drive config");
    add_common(steady, steady_o);
    auto* windows = app.add_subcommand("windows", "transparency windows in the absorption spectrum");
    add_common(windows, windows_o);
    auto* compare = app.add_subcommand("compare", "oracle vs closed-form cascades, per-detuning differences");
    add_common(compare, compare_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(mmit::ExitCode::ConfigError);
    }

    try {
        if (*spectrum) cmd_spectrum(spectrum_o);
        else if (*delay) cmd_delay(delay_o, delay_at);
        else if (*steady) cmd_steady_state(steady_o);
        else if (*windows) cmd_windows(windows_o);
        else if (*compare) cmd_compare(compare_o);
    } catch (const mmit::Error& e) {
        std::cerr << "error kind=" << e.kind() << " detail=\"" << e.what() << "\"\n";
        return static_cast<int>(e.exit_code());
    } catch (const std::exception& e) {
        std::cerr << "error kind=Internal detail=\"" << e.what() << "\"\n";
        return 1;
    }
    return static_cast<int>(mmit::ExitCode::Success);
}
