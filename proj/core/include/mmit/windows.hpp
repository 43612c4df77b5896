#pragma once

#include <span>
#include <vector>

namespace mmit {

/// One transparency window: a dip in the absorption spectrum.
struct TransparencyWindow {
    double delta_min = 0.0;  ///< δ at the local minimum (rad/s)
    double depth = 0.0;      ///< min(left peak, right peak) − minimum
    double width = 0.0;      ///< full width at half depth (rad/s)
    double left_peak_delta = 0.0;
    double right_peak_delta = 0.0;
};

/**
 * Scans a δ-sorted absorption trace for local minima whose nearest local
 * maxima on both sides each rise by at least prominence·(max − min) of the
 * whole trace. Plateaus count as one extremum; the trace end points are never
 * peaks. Width is measured between the linearly interpolated crossings of
 * minimum + depth/2 inside the bracketing peaks.
 */
[[nodiscard]] std::vector<TransparencyWindow> find_transparency_windows(std::span<const double> delta,
                                                                        std::span<const double> absorption,
                                                                        double prominence = 0.05);

}  // namespace mmit
