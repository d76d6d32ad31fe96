#include "persuasion/crowdfund.hpp"

#include <algorithm>
#include <cmath>

#include "persuasion/attainable.hpp"
#include "persuasion/rng.hpp"

namespace persuasion {

CrowdfundStrategy crowdfund_equilibrium(const CrowdfundParams& params) {
    params.validate();

    const double babbling_pledge = crowdfund_br(params, 0.5);
    if (params.n * babbling_pledge >= params.eta_threshold) {
        // No information transmission needed; everyone pledges on the prior.
        CrowdfundStrategy strategy{params.n,
                                   params.n,
                                   1.0,
                                   1.0,
                                   PiecewiseDensity::uniform(),
                                   PiecewiseDensity::uniform(),
                                   StepFunction({0.0, 1.0}, {1.0}),
                                   StepFunction({0.0, 1.0}, {1.0}),
                                   babbling_pledge,
                                   babbling_pledge,
                                   true,
                                   true};
        return strategy;
    }

    const int k = static_cast<int>(
        std::ceil(static_cast<double>(params.n) * params.rho * params.rho / 4.0 - 1e-12));
    const int k_clamped = std::clamp(k, 1, params.n - 1);
    const double gamma = static_cast<double>(k_clamped) / params.n;

    const UniformMaxExpectedState optimum = max_expected_state_uniform(gamma);
    const double theta1 = optimum.theta1;

    // phi = (1/c0) d pi / d pi0: gamma below theta1, 1 above.
    StepFunction phi({0.0, theta1, 1.0}, {gamma, 1.0});
    StepFunction nontarget({0.0, theta1, 1.0}, {0.0, 1.0});

    PiecewiseDensity target = bayes_update(PiecewiseDensity::uniform(), phi);
    StepFunction residual_lik({0.0, theta1, 1.0}, {1.0 - gamma, 0.0});
    PiecewiseDensity residual = bayes_update(PiecewiseDensity::uniform(), residual_lik);

    const double pledge = crowdfund_br(params, target.mean());
    CrowdfundStrategy strategy{params.n,
                               k_clamped,
                               gamma,
                               theta1,
                               std::move(target),
                               std::move(residual),
                               std::move(phi),
                               std::move(nontarget),
                               pledge,
                               crowdfund_br(params, residual.mean()),
                               false,
                               k_clamped * pledge >= params.eta_threshold};
    return strategy;
}

SimReport simulate_crowdfund(const CrowdfundStrategy& strategy, const CrowdfundParams& params,
                             int trials_per_theta, int theta_grid, uint64_t seed) {
    params.validate();
    if (strategy.n != params.n) {
        throw AudienceMismatch("strategy audience differs from the game's");
    }
    if (trials_per_theta <= 0 || theta_grid <= 0) {
        throw InvalidParams("trials and grid size must be positive");
    }

    const int n = strategy.n;
    const int k = strategy.k;
    const int trials = trials_per_theta * theta_grid;

    SimReport report;
    report.rng_algorithm = kRngAlgorithm;
    report.seed = seed;
    report.trials = trials;
    report.min_persuaded_count = n;

    int64_t backed = 0;
    double min_total = std::numeric_limits<double>::infinity();
    double payoff_sum = 0.0;
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng = SplitMix64::substream(seed, static_cast<uint64_t>(t));
        const double theta = (t / trials_per_theta + 0.5) / theta_grid;

        const double nt = strategy.nontarget_prob(theta);
        int persuaded = k;
        for (int r = k; r < n; ++r) {
            if (rng.bernoulli(nt)) ++persuaded;
        }
        const double total = persuaded * strategy.pledge_persuaded +
                             (n - persuaded) * strategy.pledge_residual;
        const bool is_backed = total >= params.eta_threshold;
        backed += is_backed ? 1 : 0;
        payoff_sum += is_backed ? 1.0 : 0.0;
        min_total = std::min(min_total, total);
        report.min_persuaded_count = std::min(report.min_persuaded_count, persuaded);
    }

    report.mean_sender_payoff = payoff_sum / trials;
    report.win_rate = static_cast<double>(backed) / trials;
    report.extra["min_total_pledges"] = min_total;
    report.extra["pledge_persuaded"] = strategy.pledge_persuaded;
    report.extra["pledge_residual"] = strategy.pledge_residual;
    report.extra["theta_grid"] = static_cast<double>(theta_grid);
    return report;
}

}  // namespace persuasion
