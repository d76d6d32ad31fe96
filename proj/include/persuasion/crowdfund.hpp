#pragma once

#include "persuasion/games.hpp"
#include "persuasion/piecewise.hpp"
#include "persuasion/simulate.hpp"

namespace persuasion {

/// Continuous-state targeted strategy for the crowdfunding game: the target
/// posterior is the two-level density maximizing the expected state at
/// gamma = n'/n, and the persuasive message is a threshold revelation for
/// non-targets.
struct CrowdfundStrategy {
    int n = 1;
    int k = 1;            ///< target size n'
    double gamma = 1.0;   ///< k / n
    double theta1 = 0.5;  ///< threshold of the two-level posterior
    PiecewiseDensity target_posterior;
    PiecewiseDensity residual_posterior;
    StepFunction phi;             ///< P(persuasive | theta)
    StepFunction nontarget_prob;
    double pledge_persuaded = 0.0;
    double pledge_residual = 0.0;
    bool babbling = false;
    bool check = false;  ///< k * pledge_persuaded covers the backing threshold
};

/// Builds the equilibrium strategy. When the prior-mean pledge already backs
/// the project (possible for rho > 1), returns a babbling strategy instead.
CrowdfundStrategy crowdfund_equilibrium(const CrowdfundParams& params);

/// Runs trials_per_theta rounds at each point of a uniform theta grid and
/// reports the backing rate and the minimum total pledge across all trials.
SimReport simulate_crowdfund(const CrowdfundStrategy& strategy, const CrowdfundParams& params,
                             int trials_per_theta, int theta_grid, uint64_t seed);

}  // namespace persuasion
