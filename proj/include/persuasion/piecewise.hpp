#pragma once

#include <vector>

#include "persuasion/errors.hpp"

namespace persuasion {

/// Step function on [0,1]: level levels[i] on [knots[i], knots[i+1]).
/// Knots start at 0, end at 1, strictly increasing. Used for message
/// likelihoods theta -> P(message | theta).
struct StepFunction {
    std::vector<double> knots;
    std::vector<double> levels;

    StepFunction(std::vector<double> knots_, std::vector<double> levels_);

    double operator()(double theta) const;
};

/// Piecewise-constant probability density on [0,1]. Closed under Bayes
/// updating by step-function likelihoods, so the continuous-state posteriors
/// in this library are all exact.
class PiecewiseDensity {
public:
    PiecewiseDensity(std::vector<double> breakpoints, std::vector<double> densities);

    static PiecewiseDensity uniform();

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& densities() const { return densities_; }

    double operator()(double theta) const;

    /// Integral of theta * f(theta) over [0,1], closed form per piece.
    double mean() const;

private:
    std::vector<double> breakpoints_;
    std::vector<double> densities_;
};

/// Exact posterior density proportional to prior(theta) * likelihood(theta).
/// Throws ZeroProbabilityMessage when the marginal message probability is 0.
PiecewiseDensity bayes_update(const PiecewiseDensity& prior, const StepFunction& likelihood);

/// Marginal probability of the message: integral of prior * likelihood.
double message_probability(const PiecewiseDensity& prior, const StepFunction& likelihood);

/// Expectation of the state under a piecewise density (alias for mean()).
double expected_state(const PiecewiseDensity& density);

}  // namespace persuasion
