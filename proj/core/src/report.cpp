#include "mmit/report.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

namespace mmit {

namespace {

using nlohmann::ordered_json;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json complex_json(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json params_json(const SystemParams& p) {
    ordered_json j;
    j["kappa_c"] = p.kappa_c;
    j["kappa_n"] = p.kappa_n;
    j["gamma_a"] = p.gamma_a;
    j["gamma_b"] = p.gamma_b;
    j["omega_b"] = p.omega_b;
    j["delta_a"] = p.delta_a;
    j["delta_c_eff"] = p.delta_c_eff;
    j["delta_n_eff"] = p.delta_n_eff;
    j["g_N"] = p.g_N;
    j["G_c"] = complex_json(p.G_c);
    j["G_n"] = complex_json(p.G_n);
    j["eps_p"] = p.eps_p;
    return j;
}

ordered_json steady_state_json(const SteadyState& ss) {
    ordered_json j;
    j["n0"] = complex_json(ss.n0);
    j["c0"] = complex_json(ss.c0);
    j["a0"] = complex_json(ss.a0);
    j["q0"] = ss.q0;
    j["delta_c_eff"] = ss.delta_c_eff;
    j["delta_n_eff"] = ss.delta_n_eff;
    j["residual"] = ss.residual;
    j["iterations"] = ss.iterations;
    j["multiple_roots"] = ss.multiple_roots;
    return j;
}

ordered_json meta_json(const SweepResult& r) {
    ordered_json meta;
    meta["units"] = "rad/s";
    meta["params"] = params_json(r.resolved.params.get());
    if (r.resolved.steady_state) meta["steady_state"] = steady_state_json(*r.resolved.steady_state);
    meta["sweep"] = {{"delta_start", r.sweep.delta_start}, {"delta_stop", r.sweep.delta_stop},
                     {"n_points", r.sweep.n_points},       {"fd_step", r.sweep.fd_step},
                     {"prominence", r.sweep.prominence},   {"engine", std::string(to_string(r.sweep.engine))}};
    return meta;
}

}  // namespace

void write_spectrum_csv(std::ostream& os, const SweepResult& r) {
    os << kSpectrumHeader << '\n';
    for (const auto& pt : r.points) {
        os << num(pt.delta) << ',' << num(pt.eps_out.real()) << ',' << num(pt.eps_out.imag()) << ','
           << num(pt.T.real()) << ',' << num(pt.T.imag()) << ',' << num(pt.T_sq) << ',' << num(pt.phase) << ','
           << num(pt.tau) << '\n';
    }
}

void write_spectrum_json(std::ostream& os, const SweepResult& r) {
    ordered_json doc;
    doc["meta"] = meta_json(r);
    ordered_json rows = ordered_json::array();
    for (const auto& pt : r.points) {
        rows.push_back({{"delta_rad_s", pt.delta},
                        {"eps_R", pt.eps_out.real()},
                        {"eps_I", pt.eps_out.imag()},
                        {"T_re", pt.T.real()},
                        {"T_im", pt.T.imag()},
                        {"T_sq", pt.T_sq},
                        {"phase_rad", pt.phase},
                        {"tau_s", pt.tau}});
    }
    doc["rows"] = std::move(rows);
    os << doc.dump(1) << '\n';
}

void write_comparison_csv(std::ostream& os, const ComparisonReport& rep) {
    os << "delta_rad_s,rel_printed_vs_oracle,rel_corrected_vs_oracle,rel_printed_vs_corrected\n";
    for (const auto& row : rep.rows) {
        os << num(row.delta) << ',' << num(row.printed_vs_oracle) << ',' << num(row.corrected_vs_oracle) << ','
           << num(row.printed_vs_corrected) << '\n';
    }
}

void write_comparison_summary_json(std::ostream& os, const ComparisonReport& rep) {
    auto s = [](const DiffSummary& d) { return ordered_json{{"max", d.max}, {"mean", d.mean}}; };
    ordered_json j;
    j["points"] = rep.rows.size();
    j["printed_vs_oracle"] = s(rep.printed_vs_oracle);
    j["corrected_vs_oracle"] = s(rep.corrected_vs_oracle);
    j["printed_vs_corrected"] = s(rep.printed_vs_corrected);
    os << j.dump(1) << '\n';
}

void write_windows_csv(std::ostream& os, std::span<const TransparencyWindow> windows) {
    os << "delta_min_rad_s,depth,width_rad_s,left_peak_rad_s,right_peak_rad_s\n";
    for (const auto& w : windows) {
        os << num(w.delta_min) << ',' << num(w.depth) << ',' << num(w.width) << ',' << num(w.left_peak_delta)
           << ',' << num(w.right_peak_delta) << '\n';
    }
}

void write_windows_json(std::ostream& os, std::span<const TransparencyWindow> windows, const SweepResult& r) {
    ordered_json doc;
    doc["meta"] = meta_json(r);
    ordered_json list = ordered_json::array();
    for (const auto& w : windows) {
        list.push_back({{"delta_min_rad_s", w.delta_min},
                        {"depth", w.depth},
                        {"width_rad_s", w.width},
                        {"left_peak_rad_s", w.left_peak_delta},
                        {"right_peak_rad_s", w.right_peak_delta}});
    }
    doc["count"] = windows.size();
    doc["windows"] = std::move(list);
    os << doc.dump(1) << '\n';
}

void write_steady_state(std::ostream& os, const SteadyState& ss, const SystemParams& effective, bool json) {
    if (json) {
        ordered_json j;
        j["steady_state"] = steady_state_json(ss);
        j["effective"] = params_json(effective);
        os << j.dump(1) << '\n';
        return;
    }
    os << "n0_re = " << num(ss.n0.real()) << '\n'
       << "n0_im = " << num(ss.n0.imag()) << '\n'
       << "q0 = " << num(ss.q0) << '\n'
       << "delta_n_eff_rad_s = " << num(ss.delta_n_eff) << '\n'
       << "delta_c_eff_rad_s = " << num(ss.delta_c_eff) << '\n'
       << "G_n_re_rad_s = " << num(effective.G_n.real()) << '\n'
       << "G_n_im_rad_s = " << num(effective.G_n.imag()) << '\n'
       << "G_c_re_rad_s = " << num(effective.G_c.real()) << '\n'
       << "G_c_im_rad_s = " << num(effective.G_c.imag()) << '\n'
       << "residual = " << num(ss.residual) << '\n'
       << "iterations = " << ss.iterations << '\n'
       << "multiple_roots = " << (ss.multiple_roots ? "true" : "false") << '\n';
}

}  // namespace mmit
