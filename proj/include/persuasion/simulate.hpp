#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "persuasion/games.hpp"
#include "persuasion/strategy.hpp"

namespace persuasion {

/// Aggregate statistics of a seeded simulation run. Identical (seed, trials)
/// inputs produce bit-identical reports, independent of thread count.
struct SimReport {
    std::string rng_algorithm;
    uint64_t seed = 0;
    int trials = 0;
    double mean_sender_payoff = 0.0;
    double win_rate = 0.0;  ///< fraction of trials with payoff >= 1
    /// Max total-variation distance between empirical and analytic posteriors
    /// over on-path messages.
    double empirical_posterior_error = 0.0;
    /// TV distance between the prior and the message-frequency-weighted
    /// mixture of analytic posteriors.
    double martingale_error = 0.0;
    int min_persuaded_count = 0;  ///< min over trials of persuasive-message receivers
    std::map<std::string, double> extra;  ///< game-specific statistics
};

/// Result of checking the equilibrium conditions for a targeted strategy.
struct EquilibriumCheck {
    bool receiver_br_ok = false;
    double sender_deviation_gain = 0.0;
    double tolerance = 1e-9;

    bool certified() const { return receiver_br_ok && sender_deviation_gain <= tolerance; }
};

/// Runs `trials` independent rounds of the strategy against the game: draw a
/// state from the prior, draw the target set, deliver messages, let receivers
/// best-respond to the analytic posteriors (ties coordinated in the sender's
/// favor via the shared sunspot), then score the sender by the game's
/// profile payoff. Honors the THREADS environment variable without changing
/// results.
SimReport simulate(const TargetedStrategy& strategy, const Game& game,
                   const FiniteBelief& pi0, int trials, uint64_t seed);

/// Equilibrium check specialized to two-message targeted strategies: verifies
/// receiver optimality at both posteriors and enumerates all n+1 counts of
/// persuasive messages as sender deviations (payoffs depend only on the
/// count, by symmetry).
EquilibriumCheck verify_equilibrium(const TargetedStrategy& strategy, const Game& game,
                                    const FiniteBelief& pi0,
                                    const FiniteBelief& offpath_belief);

}  // namespace persuasion
