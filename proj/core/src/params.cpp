#include "mmit/params.hpp"

#include <cmath>
#include <initializer_list>
#include <utility>

#include "mmit/errors.hpp"

namespace mmit {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(std::initializer_list<std::pair<const char*, cplx>> fields) {
    for (const auto& [name, value] : fields) {
        if (!finite(value)) throw NonFiniteValue(name);
    }
}

// A NaN rate fails finiteness first, so `!(v > 0)` only sees finite values.
void require_positive(std::initializer_list<std::pair<const char*, double>> rates) {
    for (const auto& [name, value] : rates) {
        if (!std::isfinite(value)) throw NonFiniteValue(name);
        if (!(value > 0.0)) throw NonPositiveRate(name);
    }
}

}  // namespace

ValidatedParams validate_params(const SystemParams& raw) {
    require_positive({{"kappa_c", raw.kappa_c},
                      {"kappa_n", raw.kappa_n},
                      {"gamma_a", raw.gamma_a},
                      {"gamma_b", raw.gamma_b},
                      {"omega_b", raw.omega_b}});
    require_finite({{"delta_a", raw.delta_a},
                    {"delta_c_eff", raw.delta_c_eff},
                    {"delta_n_eff", raw.delta_n_eff},
                    {"g_N", raw.g_N},
                    {"G_c", raw.G_c},
                    {"G_n", raw.G_n},
                    {"eps_p", raw.eps_p}});
    if (raw.g_N < 0.0) throw NonPositiveRate("g_N");
    if (raw.eps_p == 0.0) throw NonPositiveRate("eps_p");
    return ValidatedParams(raw);
}

void validate_raw(const RawDriveParams& raw) {
    require_positive({{"kappa_c", raw.kappa_c},
                      {"kappa_n", raw.kappa_n},
                      {"gamma_a", raw.gamma_a},
                      {"gamma_b", raw.gamma_b},
                      {"omega_b", raw.omega_b}});
    require_finite({{"delta_a", raw.delta_a},
                    {"g_N", raw.g_N},
                    {"g_c_bare", raw.g_c_bare},
                    {"delta_c_bare", raw.delta_c_bare},
                    {"g_n_bare", raw.g_n_bare},
                    {"omega_L_rabi", raw.omega_L_rabi},
                    {"delta_n_bare", raw.delta_n_bare},
                    {"eps_p", raw.eps_p}});
    if (raw.g_N < 0.0) throw NonPositiveRate("g_N");
    if (raw.omega_L_rabi < 0.0) throw NonPositiveRate("omega_L_rabi");
    if (raw.eps_p == 0.0) throw NonPositiveRate("eps_p");
}

namespace presets {

SystemParams reference(double G_c_hz) {
    SystemParams p;
    p.kappa_n = hz_to_rad(1.0e6);
    p.kappa_c = 2.0 * p.kappa_n;
    p.gamma_a = p.kappa_n;
    p.gamma_b = hz_to_rad(100.0);
    p.omega_b = hz_to_rad(40.0e6);
    p.delta_a = -p.omega_b;
    p.delta_c_eff = 0.5 * p.omega_b;
    p.delta_n_eff = p.omega_b;
    p.g_N = hz_to_rad(8.0e6);
    p.G_c = hz_to_rad(G_c_hz);
    p.G_n = hz_to_rad(5.6e6);
    p.eps_p = 1.0;
    return p;
}

}  // namespace presets

}  // namespace mmit
