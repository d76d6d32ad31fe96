#pragma once

#include "persuasion/attainable.hpp"
#include "persuasion/belief.hpp"

namespace persuasion {

/// The two compound messages used by a targeted strategy: Persuasive is sent
/// to the whole target set with probability one, Residual with the remaining
/// probability to receivers outside the target.
enum class Message { Persuasive, Residual };

/// Random-target-audience communication device.
///
/// A target set of exactly k receivers (drawn uniformly) always gets the
/// persuasive message; receivers outside the target get it with the
/// state-dependent probability nontarget_prob(theta), calibrated so that the
/// message's marginal likelihood is phi(theta) and its Bayesian meaning is
/// the desired posterior.
struct TargetedStrategy {
    int n = 1;
    int k = 1;
    double gamma = 1.0;  ///< k / n
    FiniteBelief target;
    FiniteBelief prior;
    Eigen::VectorXd phi;             ///< P(persuasive message | theta), marginal
    Eigen::VectorXd nontarget_prob;  ///< P(persuasive | theta, not targeted)
};

/// Builds the strategy attaining `pi` from `pi0` with a target of k out of n
/// receivers. Requires is_attainable(pi, pi0, k/n); the analytic posterior
/// after the persuasive message is verified to reproduce `pi` at build time.
TargetedStrategy build_attaining_strategy(const FiniteBelief& pi, const FiniteBelief& pi0,
                                          int n, int k);

/// Exact posterior held by a receiver after each message. Throws
/// ZeroProbabilityMessage for the residual message when phi is identically 1.
FiniteBelief analytic_posterior(const TargetedStrategy& strategy, const FiniteBelief& pi0,
                                Message message);

}  // namespace persuasion
