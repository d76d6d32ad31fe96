#include "persuasion/piecewise.hpp"

#include <algorithm>
#include <cmath>

namespace persuasion {

namespace {

void check_grid(const std::vector<double>& knots, size_t level_count, const char* what) {
    if (knots.size() < 2 || level_count + 1 != knots.size()) {
        throw InvalidParams(std::string(what) + ": need one level per interval");
    }
    if (knots.front() != 0.0 || knots.back() != 1.0) {
        throw InvalidParams(std::string(what) + ": knots must span [0,1]");
    }
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
        if (!(knots[i] < knots[i + 1])) {
            throw InvalidParams(std::string(what) + ": knots must be strictly increasing");
        }
    }
}

size_t interval_of(const std::vector<double>& knots, double theta) {
    // theta == 1 belongs to the last interval.
    auto it = std::upper_bound(knots.begin(), knots.end(), theta);
    size_t idx = static_cast<size_t>(it - knots.begin());
    if (idx == 0) throw InvalidParams("theta below 0");
    if (idx >= knots.size()) idx = knots.size() - 1;
    return idx - 1;
}

/// Merge two knot grids into one strictly increasing grid over [0,1].
std::vector<double> merge_knots(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> merged;
    merged.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return merged;
}

}  // namespace

StepFunction::StepFunction(std::vector<double> knots_, std::vector<double> levels_)
    : knots(std::move(knots_)), levels(std::move(levels_)) {
    check_grid(knots, levels.size(), "step function");
}

double StepFunction::operator()(double theta) const {
    return levels[interval_of(knots, theta)];
}

PiecewiseDensity::PiecewiseDensity(std::vector<double> breakpoints, std::vector<double> densities)
    : breakpoints_(std::move(breakpoints)), densities_(std::move(densities)) {
    check_grid(breakpoints_, densities_.size(), "density");
    double mass = 0.0;
    for (size_t i = 0; i < densities_.size(); ++i) {
        if (densities_[i] < 0.0) throw InvalidParams("density: negative level");
        mass += densities_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
    }
    if (std::abs(mass - 1.0) > kProbTolerance * 10) {
        throw InvalidParams("density does not integrate to one");
    }
}

PiecewiseDensity PiecewiseDensity::uniform() {
    return PiecewiseDensity({0.0, 1.0}, {1.0});
}

double PiecewiseDensity::operator()(double theta) const {
    return densities_[interval_of(breakpoints_, theta)];
}

double PiecewiseDensity::mean() const {
    double acc = 0.0;
    for (size_t i = 0; i < densities_.size(); ++i) {
        const double a = breakpoints_[i];
        const double b = breakpoints_[i + 1];
        acc += densities_[i] * 0.5 * (b * b - a * a);
    }
    return acc;
}

double message_probability(const PiecewiseDensity& prior, const StepFunction& likelihood) {
    const std::vector<double> grid = merge_knots(prior.breakpoints(), likelihood.knots);
    double acc = 0.0;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const double mid = 0.5 * (grid[i] + grid[i + 1]);
        acc += prior(mid) * likelihood(mid) * (grid[i + 1] - grid[i]);
    }
    return acc;
}

PiecewiseDensity bayes_update(const PiecewiseDensity& prior, const StepFunction& likelihood) {
    const std::vector<double> grid = merge_knots(prior.breakpoints(), likelihood.knots);
    std::vector<double> levels(grid.size() - 1);
    double mass = 0.0;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const double mid = 0.5 * (grid[i] + grid[i + 1]);
        levels[i] = prior(mid) * likelihood(mid);
        mass += levels[i] * (grid[i + 1] - grid[i]);
    }
    if (mass <= 0.0) {
        throw ZeroProbabilityMessage("message has zero probability under the prior density");
    }
    for (double& level : levels) level /= mass;
    return PiecewiseDensity(grid, std::move(levels));
}

double expected_state(const PiecewiseDensity& density) {
    return density.mean();
}

}  // namespace persuasion
