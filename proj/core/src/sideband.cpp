#include "mmit/sideband.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "mmit/errors.hpp"

namespace mmit {

namespace {

constexpr double kPivotFloor = 1e-300;

}  // namespace

SidebandSystem assemble_sideband_system(const ValidatedParams& vp, double delta) {
    const SystemParams& p = vp.get();
    const cplx i(0.0, 1.0);
    const double rt2 = std::numbers::sqrt2;
    const double d = delta;

    const cplx h1(p.gamma_a, p.delta_a - d);
    const cplx h2c(p.gamma_a, -(p.delta_a + d));
    const cplx h3(p.kappa_c, p.delta_c_eff - d);
    const cplx h4c(p.kappa_c, -(p.delta_c_eff + d));
    const cplx h5(p.kappa_n, p.delta_n_eff - d);
    const cplx h6c(p.kappa_n, -(p.delta_n_eff + d));
    const cplx h7(p.omega_b * p.omega_b - d * d, -p.gamma_b * d);

    const cplx Gc = p.G_c, Gn = p.G_n;
    const cplx Gcs = std::conj(Gc), Gns = std::conj(Gn);

    SidebandSystem sys;
    sys.delta = delta;
    auto& m = sys.matrix;
    constexpr auto am = idx(Amp::a_minus), cm = idx(Amp::c_minus), nm = idx(Amp::n_minus);
    constexpr auto ap = idx(Amp::a_plus_conj), cp = idx(Amp::c_plus_conj), np = idx(Amp::n_plus_conj);
    constexpr auto qm = idx(Amp::q_minus);

    m[am][am] = h1;
    m[am][cm] = i * p.g_N;

    m[cm][cm] = h3;
    m[cm][am] = i * p.g_N;
    m[cm][qm] = -Gc / rt2;

    m[nm][nm] = h5;
    m[nm][qm] = Gn / rt2;

    m[ap][ap] = h2c;
    m[ap][cp] = -i * p.g_N;

    m[cp][cp] = h4c;
    m[cp][ap] = -i * p.g_N;
    m[cp][qm] = -Gcs / rt2;

    m[np][np] = h6c;
    m[np][qm] = Gns / rt2;

    const cplx force = -i * p.omega_b / rt2;
    m[qm][qm] = h7;
    m[qm][cm] = force * Gcs;
    m[qm][cp] = -force * Gc;
    m[qm][nm] = -force * Gns;
    m[qm][np] = force * Gn;

    sys.rhs[cm] = p.eps_p;
    return sys;
}

double backward_error(const SidebandSystem& sys, const SidebandVector& x) {
    double worst = 0.0;
    for (std::size_t r = 0; r < kSidebandDim; ++r) {
        cplx ax = 0.0;
        double scale = std::abs(sys.rhs[r]);
        for (std::size_t c = 0; c < kSidebandDim; ++c) {
            ax += sys.matrix[r][c] * x[c];
            scale += std::abs(sys.matrix[r][c]) * std::abs(x[c]);
        }
        const double res = std::abs(ax - sys.rhs[r]);
        if (res == 0.0) continue;
        worst = std::max(worst, scale > 0.0 ? res / scale : INFINITY);
    }
    return worst;
}

SidebandSolution solve_sideband(const SidebandSystem& sys) {
    constexpr std::size_t n = kSidebandDim;
    SidebandMatrix a = sys.matrix;
    SidebandVector b = sys.rhs;

    // Row equilibration: the mechanical row carries ω_b² while the others
    // carry single rates.
    for (std::size_t r = 0; r < n; ++r) {
        double s = 0.0;
        for (const auto& v : a[r]) s = std::max(s, std::abs(v));
        if (s == 0.0) throw SingularSystem(sys.delta);
        for (auto& v : a[r]) v /= s;
        b[r] /= s;
    }

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a[k][k]);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (const double v = std::abs(a[r][k]); v > best) {
                best = v;
                piv = r;
            }
        }
        if (!(best > kPivotFloor)) throw SingularSystem(sys.delta);
        if (piv != k) {
            std::swap(a[piv], a[k]);
            std::swap(b[piv], b[k]);
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const cplx f = a[r][k] / a[k][k];
            if (f == cplx{}) continue;
            for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
            b[r] -= f * b[k];
        }
    }

    SidebandVector x{};
    for (std::size_t k = n; k-- > 0;) {
        cplx acc = b[k];
        for (std::size_t c = k + 1; c < n; ++c) acc -= a[k][c] * x[c];
        x[k] = acc / a[k][k];
    }

    SidebandSolution s;
    s.a_minus = x[idx(Amp::a_minus)];
    s.c_minus = x[idx(Amp::c_minus)];
    s.n_minus = x[idx(Amp::n_minus)];
    s.a_plus_conj = x[idx(Amp::a_plus_conj)];
    s.c_plus_conj = x[idx(Amp::c_plus_conj)];
    s.n_plus_conj = x[idx(Amp::n_plus_conj)];
    s.q_minus = x[idx(Amp::q_minus)];
    s.residual = backward_error(sys, x);
    for (const auto& v : x) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw SingularSystem(sys.delta);
    }
    return s;
}

}  // namespace mmit
