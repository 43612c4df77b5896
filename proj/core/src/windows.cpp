#include "mmit/windows.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmit {

namespace {

enum class Kind { Min, Max };

struct Extremum {
    Kind kind;
    std::size_t index;  // representative sample (plateau centre)
};

std::vector<Extremum> extrema(std::span<const double> y) {
    struct Run {
        std::size_t first, last;
    };
    std::vector<Run> runs;
    for (std::size_t k = 0; k < y.size();) {
        std::size_t j = k;
        while (j + 1 < y.size() && y[j + 1] == y[k]) ++j;
        runs.push_back({k, j});
        k = j + 1;
    }
    std::vector<Extremum> out;
    for (std::size_t r = 1; r + 1 < runs.size(); ++r) {
        const double prev = y[runs[r - 1].first], cur = y[runs[r].first], next = y[runs[r + 1].first];
        const std::size_t mid = (runs[r].first + runs[r].last) / 2;
        if (cur < prev && cur < next) out.push_back({Kind::Min, mid});
        else if (cur > prev && cur > next) out.push_back({Kind::Max, mid});
    }
    return out;
}

double crossing(std::span<const double> x, std::span<const double> y, std::size_t inner, std::size_t outer,
                double level) {
    const int step = outer > inner ? 1 : -1;
    std::size_t k = inner;
    while (k != outer && y[k + step] < level) k += step;
    if (k == outer) return x[outer];
    const std::size_t n = k + step;
    const double t = (level - y[k]) / (y[n] - y[k]);
    return x[k] + t * (x[n] - x[k]);
}

}  // namespace

std::vector<TransparencyWindow> find_transparency_windows(std::span<const double> delta,
                                                          std::span<const double> absorption,
                                                          double prominence) {
    if (delta.size() != absorption.size()) throw std::invalid_argument("delta/absorption size mismatch");
    if (!(prominence > 0.0 && prominence < 1.0)) throw std::invalid_argument("prominence must lie in (0, 1)");
    if (!std::is_sorted(delta.begin(), delta.end())) throw std::invalid_argument("spectrum must be sorted by delta");

    std::vector<TransparencyWindow> windows;
    if (absorption.size() < 3) return windows;

    const auto [lo, hi] = std::minmax_element(absorption.begin(), absorption.end());
    const double threshold = prominence * (*hi - *lo);
    if (threshold <= 0.0) return windows;

    const std::vector<Extremum> ext = extrema(absorption);
    for (std::size_t e = 1; e + 1 < ext.size(); ++e) {
        if (ext[e].kind != Kind::Min || ext[e - 1].kind != Kind::Max || ext[e + 1].kind != Kind::Max) continue;
        const std::size_t m = ext[e].index, l = ext[e - 1].index, r = ext[e + 1].index;
        const double ymin = absorption[m];
        const double rise_l = absorption[l] - ymin, rise_r = absorption[r] - ymin;
        if (rise_l < threshold || rise_r < threshold) continue;

        TransparencyWindow w;
        w.delta_min = delta[m];
        w.depth = std::min(rise_l, rise_r);
        w.left_peak_delta = delta[l];
        w.right_peak_delta = delta[r];
        const double level = ymin + 0.5 * w.depth;
        w.width = crossing(delta, absorption, m, r, level) - crossing(delta, absorption, m, l, level);
        windows.push_back(w);
    }
    return windows;
}

}  // namespace mmit
