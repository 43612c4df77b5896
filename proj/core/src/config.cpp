#include "mmit/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "mmit/errors.hpp"

namespace mmit {

namespace {

constexpr std::array kSharedKeys{"kappa_c", "kappa_n", "gamma_a", "gamma_b", "omega_b", "delta_a", "g_N"};
constexpr std::array kEffectiveKeys{"delta_c_eff", "delta_n_eff", "G_c", "G_n"};
constexpr std::array kRawKeys{"g_c_bare", "delta_c_bare", "g_n_bare", "omega_L_rabi", "delta_n_bare"};
constexpr std::array kOptionalKeys{"eps_p",     "delta_start", "delta_stop", "fd_step", "n_points", "prominence",
                                   "engine",    "solver_tol",  "max_iter",   "output",  "format",   "threads"};

template <std::size_t N>
bool contains(const std::array<const char*, N>& keys, std::string_view k) {
    return std::any_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; });
}

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::optional<long> parse_int(std::string_view s) {
    s = trim(s);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

struct Entry {
    int line;
    std::string value;
};

class KeyValues {
public:
    explicit KeyValues(std::string_view text) {
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto nl = text.find('\n', pos);
            std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos) throw ParseError(line_no, "expected key = value");
            const std::string key(trim(line.substr(0, eq)));
            const std::string value(trim(line.substr(eq + 1)));
            if (key.empty()) throw ParseError(line_no, "empty key");
            if (value.empty()) throw ParseError(line_no, "empty value for " + key);
            if (!contains(kSharedKeys, key) && !contains(kEffectiveKeys, key) && !contains(kRawKeys, key) &&
                !contains(kOptionalKeys, key)) {
                throw ParseError(line_no, "unknown key " + key);
            }
            if (entries_.count(key)) throw ParseError(line_no, "duplicate key " + key);
            entries_.emplace(key, Entry{line_no, value});
        }
    }

    [[nodiscard]] bool has(const std::string& key) const { return entries_.count(key) > 0; }

    [[nodiscard]] const Entry& require(const std::string& key) const {
        const auto it = entries_.find(key);
        if (it == entries_.end()) throw MissingField(key);
        return it->second;
    }

    [[nodiscard]] double real(const std::string& key) const {
        const Entry& e = require(key);
        const auto v = parse_double(e.value);
        if (!v || !std::isfinite(*v)) throw ParseError(e.line, "not a finite number: " + key);
        return *v;
    }

    [[nodiscard]] double real_or(const std::string& key, double fallback) const {
        return has(key) ? real(key) : fallback;
    }

    [[nodiscard]] cplx complex(const std::string& key) const {
        const Entry& e = require(key);
        const auto v = parse_complex(e.value);
        if (!v || !std::isfinite(v->real()) || !std::isfinite(v->imag())) {
            throw ParseError(e.line, "not a complex number: " + key);
        }
        return *v;
    }

    [[nodiscard]] long integer_or(const std::string& key, long fallback) const {
        if (!has(key)) return fallback;
        const Entry& e = require(key);
        const auto v = parse_int(e.value);
        if (!v) throw ParseError(e.line, "not an integer: " + key);
        return *v;
    }

    [[nodiscard]] std::optional<std::string> text(const std::string& key) const {
        if (!has(key)) return std::nullopt;
        return require(key).value;
    }

    [[nodiscard]] int line_of(const std::string& key) const { return require(key).line; }

private:
    std::map<std::string, Entry> entries_;
};

template <std::size_t N>
std::optional<std::string> first_present(const KeyValues& kv, const std::array<const char*, N>& keys) {
    for (const char* k : keys) {
        if (kv.has(k)) return std::string(k);
    }
    return std::nullopt;
}

}  // namespace

std::optional<cplx> parse_complex(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    const char last = s.back();
    if (last != 'j' && last != 'i') {
        const auto re = parse_double(s);
        if (!re) return std::nullopt;
        return cplx(*re, 0.0);
    }
    const std::string_view body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not leading and not an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) {
        const auto im = parse_double(body);
        if (!im) return std::nullopt;
        return cplx(0.0, *im);
    }
    const auto re = parse_double(body.substr(0, split));
    const auto im = parse_double(body.substr(split));
    if (!re || !im) return std::nullopt;
    return cplx(*re, *im);
}

std::optional<OutputFormat> parse_format(std::string_view s) noexcept {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    return std::nullopt;
}

SweepSpec default_sweep(double omega_b) {
    SweepSpec s;
    s.delta_start = 0.5 * omega_b;
    s.delta_stop = 1.5 * omega_b;
    s.n_points = 2001;
    s.fd_step = 1e-6 * omega_b;
    s.prominence = 0.05;
    return s;
}

void validate_sweep(const SweepSpec& s) {
    if (!std::isfinite(s.delta_start) || !std::isfinite(s.delta_stop) || !(s.delta_start < s.delta_stop)) {
        throw ConfigError("InvalidSweep", "delta_start < delta_stop required");
    }
    if (s.n_points < 3) throw ConfigError("InvalidSweep", "n_points >= 3 required");
    if (!(s.fd_step > 0.0) || !std::isfinite(s.fd_step)) throw ConfigError("InvalidSweep", "fd_step > 0 required");
    if (!(s.prominence > 0.0 && s.prominence < 1.0)) {
        throw ConfigError("InvalidSweep", "prominence in (0, 1) required");
    }
}

double RunConfig::omega_b() const noexcept {
    return std::visit([](const auto& p) { return p.omega_b; }, params);
}

RunConfig parse_config(std::string_view text) {
    const KeyValues kv(text);

    const auto eff = first_present(kv, kEffectiveKeys);
    const auto raw = first_present(kv, kRawKeys);
    if (eff && raw) throw ConflictingModes(*eff + " and " + *raw + " both present");

    for (const char* k : kSharedKeys) (void)kv.require(k);

    RunConfig cfg;
    const double eps_p = kv.real_or("eps_p", 1.0);
    const auto hz = [&](const char* key) { return hz_to_rad(kv.real(key)); };

    if (raw) {
        for (const char* k : kRawKeys) (void)kv.require(k);
        RawDriveParams p;
        p.kappa_c = hz("kappa_c");
        p.kappa_n = hz("kappa_n");
        p.gamma_a = hz("gamma_a");
        p.gamma_b = hz("gamma_b");
        p.omega_b = hz("omega_b");
        p.delta_a = hz("delta_a");
        p.g_N = hz("g_N");
        p.g_c_bare = hz("g_c_bare");
        p.delta_c_bare = hz("delta_c_bare");
        p.g_n_bare = hz("g_n_bare");
        p.omega_L_rabi = hz("omega_L_rabi");
        p.delta_n_bare = hz("delta_n_bare");
        p.eps_p = eps_p;
        validate_raw(p);
        cfg.params = p;
    } else {
        for (const char* k : kEffectiveKeys) (void)kv.require(k);
        SystemParams p;
        p.kappa_c = hz("kappa_c");
        p.kappa_n = hz("kappa_n");
        p.gamma_a = hz("gamma_a");
        p.gamma_b = hz("gamma_b");
        p.omega_b = hz("omega_b");
        p.delta_a = hz("delta_a");
        p.g_N = hz("g_N");
        p.delta_c_eff = hz("delta_c_eff");
        p.delta_n_eff = hz("delta_n_eff");
        p.G_c = hz_to_rad(kv.complex("G_c"));
        p.G_n = hz_to_rad(kv.complex("G_n"));
        p.eps_p = eps_p;
        (void)validate_params(p);
        cfg.params = p;
    }

    const double wb = cfg.omega_b();
    SweepSpec s = default_sweep(wb);
    if (kv.has("delta_start")) s.delta_start = hz("delta_start");
    if (kv.has("delta_stop")) s.delta_stop = hz("delta_stop");
    if (kv.has("fd_step")) s.fd_step = hz("fd_step");
    s.n_points = static_cast<int>(kv.integer_or("n_points", s.n_points));
    s.prominence = kv.real_or("prominence", s.prominence);
    if (const auto e = kv.text("engine")) {
        const auto engine = parse_engine(*e);
        if (!engine) throw ParseError(kv.line_of("engine"), "unknown engine " + *e);
        s.engine = *engine;
    }
    validate_sweep(s);
    cfg.sweep = s;

    cfg.solver.tol = kv.real_or("solver_tol", cfg.solver.tol);
    cfg.solver.max_iter = static_cast<int>(kv.integer_or("max_iter", cfg.solver.max_iter));
    if (!(cfg.solver.tol > 0.0) || cfg.solver.max_iter < 1) {
        throw ConfigError("InvalidSolverOptions", "solver_tol > 0 and max_iter >= 1 required");
    }

    if (const auto out = kv.text("output")) cfg.output = *out;
    if (const auto f = kv.text("format")) {
        const auto fmt = parse_format(*f);
        if (!fmt) throw ParseError(kv.line_of("format"), "unknown format " + *f);
        cfg.format = *fmt;
    }
    cfg.threads = static_cast<int>(kv.integer_or("threads", 1));
    if (cfg.threads < 1) throw ConfigError("InvalidThreads", "threads >= 1 required");
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("FileNotFound", "path=" + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace mmit
