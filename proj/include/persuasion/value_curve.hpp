#pragma once

#include <utility>
#include <vector>

#include "persuasion/attainable.hpp"

namespace persuasion {

/// Sender payoff as a function of the probability of the high state, sampled
/// on a grid over [0,1].
///
/// Discontinuities are represented by duplicated grid coordinates: the first
/// entry carries the left-limit value, the second the right/at-point value.
/// Between distinct coordinates the curve is linear.
struct ValueCurve {
    std::vector<double> grid;         ///< nondecreasing; breakpoints appear twice
    std::vector<double> values;       ///< payoff per grid entry
    std::vector<double> breakpoints;  ///< coordinates where the BR correspondence changes

    /// Piecewise-linear evaluation. At a duplicated coordinate returns the
    /// larger of the two stored values (upper semicontinuous selection).
    double value_at(double p) const;

    size_t size() const { return grid.size(); }
};

/// Smallest quasiconcave upper-semicontinuous majorant: pointwise minimum of
/// the running maxima from the left and from the right.
ValueCurve qconv_envelope(const ValueCurve& curve);

/// Smallest concave majorant: upper convex hull of the sampled points,
/// re-evaluated on the same grid.
ValueCurve conv_envelope(const ValueCurve& curve);

/// Maximum of the curve over the attainable interval around `at`, together
/// with the arg max parameter (smallest in case of ties). Evaluates every
/// grid entry inside the interval plus both interpolated endpoints, which is
/// exact for piecewise-linear curves.
std::pair<double, double> attain_operator(const ValueCurve& curve, double gamma0, double at);

}  // namespace persuasion
