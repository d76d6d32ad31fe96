#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/errors.hpp"

namespace persuasion {

/// Normalization slack accepted when validating probability vectors.
inline constexpr double kProbTolerance = 1e-12;

/// Finite state space. Labels identify states; values, when present, give the
/// scalar payoff-relevant magnitude of each state (used by expected_state).
class StateSpace {
public:
    StateSpace(std::vector<std::string> labels,
               std::optional<Eigen::VectorXd> values = std::nullopt);

    /// Two-state space {"1","0"} with values (1, 0); index 0 is the high state.
    static StateSpace binary();

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    bool has_values() const { return values_.has_value(); }
    const Eigen::VectorXd& values() const;

    bool operator==(const StateSpace& other) const;

private:
    std::vector<std::string> labels_;
    std::optional<Eigen::VectorXd> values_;
};

/// Probability vector over a finite StateSpace.
///
/// Entries are validated to be nonnegative and sum to one within
/// kProbTolerance. Support is exact: a state belongs to the support iff its
/// stored probability is not zero.
class FiniteBelief {
public:
    FiniteBelief(StateSpace space, Eigen::VectorXd probs);

    /// Belief over StateSpace::binary() with P(high state) = p.
    static FiniteBelief binary(double p);

    const StateSpace& space() const { return space_; }
    const Eigen::VectorXd& probs() const { return probs_; }
    int size() const { return static_cast<int>(probs_.size()); }
    double operator()(int i) const { return probs_(i); }

    /// Indices with exactly positive probability.
    std::vector<int> support() const;

    /// True iff every state in the support of this belief has positive
    /// probability under `reference`.
    bool absolutely_continuous_wrt(const FiniteBelief& reference) const;

private:
    StateSpace space_;
    Eigen::VectorXd probs_;
};

/// Posterior from `prior` given the per-state probability of the observed
/// message. Throws ZeroProbabilityMessage when the normalizer is zero.
FiniteBelief bayes_update(const FiniteBelief& prior, const Eigen::VectorXd& likelihood);

/// Minimum and maximum of pi(theta)/pi0(theta) over the support of pi0.
/// Requires pi absolutely continuous w.r.t. pi0.
std::pair<double, double> likelihood_ratio_bounds(const FiniteBelief& pi,
                                                  const FiniteBelief& pi0);

/// Convex combination of beliefs on a common state space.
FiniteBelief mix(const std::vector<FiniteBelief>& beliefs, const Eigen::VectorXd& weights);

/// Expectation of the state values under the belief.
double expected_state(const FiniteBelief& belief);

}  // namespace persuasion
