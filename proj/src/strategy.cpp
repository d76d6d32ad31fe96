#include "persuasion/strategy.hpp"

#include <algorithm>
#include <cmath>

namespace persuasion {

TargetedStrategy build_attaining_strategy(const FiniteBelief& pi, const FiniteBelief& pi0,
                                          int n, int k) {
    if (n <= 0 || k <= 0 || k > n) {
        throw InvalidParams("target size must satisfy 0 < k <= n");
    }
    const double gamma = static_cast<double>(k) / n;
    if (!is_attainable(pi, pi0, gamma)) {
        throw NotAttainable("posterior is not attainable at gamma = k/n");
    }

    auto [nu_lo, nu_hi] = likelihood_ratio_bounds(pi, pi0);
    (void)nu_lo;
    Eigen::VectorXd phi(pi0.size());
    Eigen::VectorXd nontarget(pi0.size());
    for (int i = 0; i < pi0.size(); ++i) {
        if (pi0(i) == 0.0) {
            // Never realized; keep the marginal identity well formed.
            phi(i) = gamma;
            nontarget(i) = 0.0;
            continue;
        }
        phi(i) = (pi(i) / pi0(i)) / nu_hi;
        if (gamma < 1.0) {
            // Attainability guarantees phi >= gamma up to tolerance.
            nontarget(i) = std::clamp((phi(i) - gamma) / (1.0 - gamma), 0.0, 1.0);
        } else {
            nontarget(i) = phi(i);
        }
    }

    TargetedStrategy strategy{n, k, gamma, pi, pi0, std::move(phi), std::move(nontarget)};

    const FiniteBelief check = analytic_posterior(strategy, pi0, Message::Persuasive);
    if ((check.probs() - pi.probs()).lpNorm<Eigen::Infinity>() > 1e-12) {
        throw NotAttainable("constructed strategy does not reproduce the target posterior");
    }
    return strategy;
}

FiniteBelief analytic_posterior(const TargetedStrategy& strategy, const FiniteBelief& pi0,
                                Message message) {
    if (message == Message::Persuasive) {
        return bayes_update(pi0, strategy.phi);
    }
    return bayes_update(pi0, Eigen::VectorXd::Ones(pi0.size()) - strategy.phi);
}

}  // namespace persuasion
