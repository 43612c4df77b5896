#include "mmit/cascade.hpp"

#include <cmath>
#include <numbers>

#include "mmit/errors.hpp"

namespace mmit {

namespace {

constexpr double kPoleRatio = 1e-30;

class Divider {
public:
    explicit Divider(double delta) : delta_(delta) {}

    cplx operator()(cplx num, cplx den, const char* where) const {
        if (den == cplx{} || std::abs(den) < kPoleRatio * std::abs(num)) throw PoleEncountered(where, delta_);
        return num / den;
    }

private:
    double delta_;
};

}  // namespace

std::string_view to_string(CascadeVariant v) noexcept {
    return v == CascadeVariant::Printed ? "printed" : "corrected";
}

HCoefficients h_coefficients(const ValidatedParams& vp, double d) {
    const SystemParams& p = vp.get();
    HCoefficients h;
    h.h1 = {p.gamma_a, p.delta_a - d};
    h.h2 = {p.gamma_a, p.delta_a + d};
    h.h3 = {p.kappa_c, p.delta_c_eff - d};
    h.h4 = {p.kappa_c, p.delta_c_eff + d};
    h.h5 = {p.kappa_n, p.delta_n_eff - d};
    h.h6 = {p.kappa_n, p.delta_n_eff + d};
    const double re = (p.omega_b - d) * (p.omega_b + d);
    h.h7 = {re, -p.gamma_b * d};
    h.h8 = {re, p.gamma_b * d};
    return h;
}

ScriptHCoefficients script_h_coefficients(const HCoefficients& h, const ValidatedParams& vp,
                                          CascadeVariant variant, double delta) {
    const SystemParams& p = vp.get();
    const Divider div(delta);
    const cplx i(0.0, 1.0);
    const double wb = p.omega_b;
    const double gN2 = p.g_N * p.g_N;
    const cplx h4c = std::conj(h.h4), h6c = std::conj(h.h6), h8c = std::conj(h.h8);

    ScriptHCoefficients s;
    s.variant = variant;
    s.H1 = 1.0 + div(gN2, h.h2 * h.h4, "H1");
    const cplx H1c = std::conj(s.H1);

    if (variant == CascadeVariant::Printed) {
        const cplx Gc2 = p.G_c * p.G_c, Gn2 = p.G_n * p.G_n;
        s.H2 = i * h8c - wb * (div(Gc2, 2.0 * H1c * h4c, "H2") + div(Gn2, 2.0 * h6c, "H2"));
        s.H3 = -wb * div(Gn2, 2.0 * h.h5, "H3") - i * h.h7;
        s.H4 = wb * (div(Gc2, h4c * s.H1, "H4") + div(Gn2, 2.0 * h6c, "H4"));
        s.H5 = s.H3 - div(wb * Gn2 * s.H4, 2.0 * h.h5 * s.H2, "H5");
        s.H6 = wb * (p.G_c / std::numbers::sqrt2) * (1.0 + div(s.H4, s.H2, "H6"));
    } else {
        const double Gc2 = std::norm(p.G_c), Gn2 = std::norm(p.G_n);
        s.H2 = 1.0;
        s.H3 = -wb * div(Gn2, 2.0 * h.h5, "H3") - i * h.h7;
        s.H4 = 0.5 * wb * (div(Gc2, h4c * H1c, "H4") + div(Gn2, h6c, "H4"));
        s.H5 = s.H3 + s.H4;
        s.H6 = wb * std::conj(p.G_c) / std::numbers::sqrt2;
    }
    return s;
}

cplx cavity_amplitude_closed_form(const ValidatedParams& vp, double delta, CascadeVariant variant) {
    const SystemParams& p = vp.get();
    const Divider div(delta);
    const HCoefficients h = h_coefficients(vp, delta);
    cplx bracket = h.h3 + div(p.g_N * p.g_N, h.h1, "h1");
    if (p.G_c != cplx{}) {
        const ScriptHCoefficients s = script_h_coefficients(h, vp, variant, delta);
        bracket -= (p.G_c / std::numbers::sqrt2) * div(s.H6, s.H5, "H5");
    }
    return div(p.eps_p, bracket, "bracket");
}

}  // namespace mmit
