#include "persuasion/value_curve.hpp"

#include <algorithm>
#include <cmath>

namespace persuasion {

double ValueCurve::value_at(double p) const {
    p = std::clamp(p, grid.front(), grid.back());
    auto hi_it = std::upper_bound(grid.begin(), grid.end(), p);
    const size_t hi = static_cast<size_t>(hi_it - grid.begin());

    if (hi == 0) return values.front();
    const size_t lo = hi - 1;
    if (grid[lo] == p) {
        // Exact hit; take the max over all entries at this coordinate.
        double best = values[lo];
        for (size_t i = lo; i-- > 0 && grid[i] == p;) best = std::max(best, values[i]);
        return best;
    }
    if (hi == grid.size()) return values.back();
    // lo is the last entry left of p (right-limit value), hi the first entry
    // right of p (left-limit value); interpolate on the open segment.
    const double t = (p - grid[lo]) / (grid[hi] - grid[lo]);
    return values[lo] + t * (values[hi] - values[lo]);
}

ValueCurve qconv_envelope(const ValueCurve& curve) {
    const size_t n = curve.size();
    std::vector<double> from_left(n), from_right(n);
    double acc = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
        acc = std::max(acc, curve.values[i]);
        from_left[i] = acc;
    }
    acc = -std::numeric_limits<double>::infinity();
    for (size_t i = n; i-- > 0;) {
        acc = std::max(acc, curve.values[i]);
        from_right[i] = acc;
    }
    ValueCurve out{curve.grid, std::vector<double>(n), curve.breakpoints};
    for (size_t i = 0; i < n; ++i) out.values[i] = std::min(from_left[i], from_right[i]);
    return out;
}

ValueCurve conv_envelope(const ValueCurve& curve) {
    // Collapse duplicated coordinates to their upper value before taking the
    // hull; the lower branch of a jump never supports the concave majorant.
    std::vector<double> xs, ys;
    xs.reserve(curve.size());
    ys.reserve(curve.size());
    for (size_t i = 0; i < curve.size(); ++i) {
        if (!xs.empty() && xs.back() == curve.grid[i]) {
            ys.back() = std::max(ys.back(), curve.values[i]);
        } else {
            xs.push_back(curve.grid[i]);
            ys.push_back(curve.values[i]);
        }
    }

    // Upper hull, monotone chain over points already sorted by x.
    std::vector<size_t> hull;
    auto cross = [&](size_t a, size_t b, size_t c) {
        return (xs[b] - xs[a]) * (ys[c] - ys[a]) - (ys[b] - ys[a]) * (xs[c] - xs[a]);
    };
    for (size_t i = 0; i < xs.size(); ++i) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), i) >= 0.0) {
            hull.pop_back();
        }
        hull.push_back(i);
    }

    ValueCurve out{curve.grid, std::vector<double>(curve.size()), curve.breakpoints};
    size_t seg = 0;
    for (size_t i = 0; i < curve.size(); ++i) {
        const double x = curve.grid[i];
        while (seg + 1 < hull.size() && xs[hull[seg + 1]] < x) ++seg;
        const size_t a = hull[seg];
        const size_t b = hull[std::min(seg + 1, hull.size() - 1)];
        if (a == b || xs[b] == xs[a]) {
            out.values[i] = ys[a];
        } else {
            const double t = (x - xs[a]) / (xs[b] - xs[a]);
            out.values[i] = ys[a] + t * (ys[b] - ys[a]);
        }
    }
    return out;
}

std::pair<double, double> attain_operator(const ValueCurve& curve, double gamma0, double at) {
    if (!(gamma0 > 0.0) || gamma0 > 1.0) {
        throw InvalidParams("gamma0 must lie in (0, 1]");
    }
    if (at <= 0.0 || at >= 1.0 || gamma0 == 1.0) {
        // Degenerate prior or gamma0 = 1: only the prior itself is attainable.
        return {curve.value_at(at), std::clamp(at, 0.0, 1.0)};
    }
    const BinaryInterval interval = binary_interval(at, gamma0);

    double best_value = curve.value_at(interval.lo);
    double best_p = interval.lo;
    auto consider = [&](double p, double value) {
        if (value > best_value) {
            best_value = value;
            best_p = p;
        }
    };
    auto begin = std::lower_bound(curve.grid.begin(), curve.grid.end(), interval.lo);
    auto end = std::upper_bound(curve.grid.begin(), curve.grid.end(), interval.hi);
    for (auto it = begin; it != end; ++it) {
        const size_t i = static_cast<size_t>(it - curve.grid.begin());
        consider(curve.grid[i], curve.values[i]);
    }
    consider(interval.hi, curve.value_at(interval.hi));
    return {best_value, best_p};
}

}  // namespace persuasion
