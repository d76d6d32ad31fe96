#include "persuasion/simulate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "persuasion/rng.hpp"

namespace persuasion {

namespace {

int thread_count_from_env() {
    const char* env = std::getenv("THREADS");
    if (!env) return 1;
    const int n = std::atoi(env);
    return n > 0 ? n : 1;
}

/// Sender-favorable selection from the best-response set (the coordinated
/// sunspot outcome).
double pick_action(const Game& game, const std::vector<double>& actions) {
    if (actions.size() == 1 || !game.sender_utility) return actions.front();
    double best = actions.front();
    for (double a : actions) {
        if (game.sender_utility(a) > game.sender_utility(best)) best = a;
    }
    return best;
}

/// Sender payoff when exactly c receivers take `action_persuaded` and the
/// rest take `action_other`.
std::vector<double> payoff_by_count(const Game& game, int n, double action_persuaded,
                                    double action_other) {
    std::vector<double> payoff(static_cast<size_t>(n) + 1);
    std::vector<double> profile(static_cast<size_t>(n), action_other);
    payoff[0] = game.profile_payoff(profile);
    for (int c = 1; c <= n; ++c) {
        profile[static_cast<size_t>(c - 1)] = action_persuaded;
        payoff[static_cast<size_t>(c)] = game.profile_payoff(profile);
    }
    return payoff;
}

int draw_state(const FiniteBelief& pi0, SplitMix64& rng) {
    const double u = rng.next_double();
    double acc = 0.0;
    for (int i = 0; i < pi0.size(); ++i) {
        acc += pi0(i);
        if (u < acc) return i;
    }
    return pi0.size() - 1;
}

struct TrialOutcome {
    double payoff = 0.0;
    int state = 0;
    int persuaded = 0;  // receivers holding the target posterior
};

}  // namespace

SimReport simulate(const TargetedStrategy& strategy, const Game& game,
                   const FiniteBelief& pi0, int trials, uint64_t seed) {
    if (game.audience.n != strategy.n) {
        throw AudienceMismatch("game audience size differs from the strategy's");
    }
    if (trials <= 0) throw InvalidParams("trials must be positive");

    const int n = strategy.n;
    const int k = strategy.k;

    const FiniteBelief post_persuade = analytic_posterior(strategy, pi0, Message::Persuasive);
    const bool residual_on_path = [&] {
        for (int i = 0; i < pi0.size(); ++i) {
            if (pi0(i) > 0.0 && strategy.phi(i) < 1.0) return true;
        }
        return false;
    }();
    // Off-path residual beliefs default to the prior; the message is never
    // drawn in that case.
    const FiniteBelief post_residual =
        residual_on_path ? analytic_posterior(strategy, pi0, Message::Residual) : pi0;

    const double action_persuaded = pick_action(game, br_set(game, post_persuade));
    const double action_residual = pick_action(game, br_set(game, post_residual));
    const std::vector<double> payoff_lut = payoff_by_count(game, n, action_persuaded,
                                                           action_residual);

    std::vector<TrialOutcome> outcomes(static_cast<size_t>(trials));

    auto run_range = [&](int begin, int end) {
        std::vector<int> indices(static_cast<size_t>(n));
        for (int t = begin; t < end; ++t) {
            SplitMix64 rng = SplitMix64::substream(seed, static_cast<uint64_t>(t));
            const int state = draw_state(pi0, rng);

            // Uniform size-k target set via partial Fisher-Yates.
            std::iota(indices.begin(), indices.end(), 0);
            for (int j = 0; j < k; ++j) {
                const int swap_with =
                    j + static_cast<int>(rng.next_below(static_cast<uint64_t>(n - j)));
                std::swap(indices[static_cast<size_t>(j)],
                          indices[static_cast<size_t>(swap_with)]);
            }

            int persuaded = k;
            const double nt = strategy.nontarget_prob(state);
            for (int j = k; j < n; ++j) {
                if (rng.bernoulli(nt)) ++persuaded;
            }

            rng.next_double();  // shared sunspot; ties are coordinated sender-favorably

            TrialOutcome& out = outcomes[static_cast<size_t>(t)];
            out.state = state;
            out.persuaded = persuaded;
            out.payoff = payoff_lut[static_cast<size_t>(persuaded)];
        }
    };

    const int threads = std::min(thread_count_from_env(), trials);
    if (threads <= 1) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (trials + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            const int begin = w * chunk;
            const int end = std::min(trials, begin + chunk);
            if (begin < end) pool.emplace_back(run_range, begin, end);
        }
        for (std::thread& worker : pool) worker.join();
    }

    // Sequential reduction in trial order keeps results independent of the
    // thread partition.
    SimReport report;
    report.rng_algorithm = kRngAlgorithm;
    report.seed = seed;
    report.trials = trials;
    report.min_persuaded_count = n;

    const int states = pi0.size();
    std::vector<int64_t> persuade_counts(static_cast<size_t>(states), 0);
    std::vector<int64_t> residual_counts(static_cast<size_t>(states), 0);
    double payoff_sum = 0.0;
    int64_t wins = 0;
    for (const TrialOutcome& out : outcomes) {
        payoff_sum += out.payoff;
        if (out.payoff >= 1.0 - 1e-12) ++wins;
        report.min_persuaded_count = std::min(report.min_persuaded_count, out.persuaded);
        persuade_counts[static_cast<size_t>(out.state)] += out.persuaded;
        residual_counts[static_cast<size_t>(out.state)] += n - out.persuaded;
    }
    report.mean_sender_payoff = payoff_sum / trials;
    report.win_rate = static_cast<double>(wins) / trials;

    const int64_t persuade_total = std::accumulate(persuade_counts.begin(),
                                                   persuade_counts.end(), int64_t{0});
    const int64_t residual_total = std::accumulate(residual_counts.begin(),
                                                   residual_counts.end(), int64_t{0});

    auto tv_against = [&](const std::vector<int64_t>& counts, int64_t total,
                          const FiniteBelief& analytic) {
        double tv = 0.0;
        for (int i = 0; i < states; ++i) {
            const double empirical = static_cast<double>(counts[static_cast<size_t>(i)]) /
                                     static_cast<double>(total);
            tv += std::abs(empirical - analytic(i));
        }
        return 0.5 * tv;
    };
    double posterior_error = 0.0;
    if (persuade_total > 0) {
        posterior_error = tv_against(persuade_counts, persuade_total, post_persuade);
    }
    if (residual_total > 0 && residual_on_path) {
        posterior_error = std::max(
            posterior_error, tv_against(residual_counts, residual_total, post_residual));
    }
    report.empirical_posterior_error = posterior_error;

    // Martingale check: message frequencies weight the analytic posteriors.
    const double total = static_cast<double>(persuade_total + residual_total);
    double martingale = 0.0;
    for (int i = 0; i < states; ++i) {
        const double mixed = (persuade_total / total) * post_persuade(i) +
                             (residual_total / total) * post_residual(i);
        martingale += std::abs(mixed - pi0(i));
    }
    report.martingale_error = 0.5 * martingale;

    report.extra["action_persuaded"] = action_persuaded;
    report.extra["action_residual"] = action_residual;
    return report;
}

EquilibriumCheck verify_equilibrium(const TargetedStrategy& strategy, const Game& game,
                                    const FiniteBelief& pi0,
                                    const FiniteBelief& offpath_belief) {
    if (game.audience.n != strategy.n) {
        throw AudienceMismatch("game audience size differs from the strategy's");
    }
    const int n = strategy.n;
    const int k = strategy.k;

    const FiniteBelief post_persuade = analytic_posterior(strategy, pi0, Message::Persuasive);
    const bool residual_on_path = [&] {
        for (int i = 0; i < pi0.size(); ++i) {
            if (pi0(i) > 0.0 && strategy.phi(i) < 1.0) return true;
        }
        return false;
    }();
    const FiniteBelief post_residual =
        residual_on_path ? analytic_posterior(strategy, pi0, Message::Residual)
                         : offpath_belief;

    EquilibriumCheck check;

    const std::vector<double> br_persuade = br_set(game, post_persuade);
    const std::vector<double> br_residual = br_set(game, post_residual);
    const double action_persuaded = pick_action(game, br_persuade);
    const double action_residual = pick_action(game, br_residual);
    auto member = [](const std::vector<double>& set, double a) {
        return std::any_of(set.begin(), set.end(),
                           [a](double x) { return std::abs(x - a) <= 1e-12; });
    };
    check.receiver_br_ok =
        member(br_persuade, action_persuaded) && member(br_residual, action_residual);

    // Payoffs depend only on the number of persuasive messages, so the 2^n
    // sender deviations collapse to n+1 counts.
    const std::vector<double> payoff = payoff_by_count(game, n, action_persuaded,
                                                       action_residual);
    const double best = *std::max_element(payoff.begin(), payoff.end());

    double worst_on_path = std::numeric_limits<double>::infinity();
    for (int i = 0; i < pi0.size(); ++i) {
        if (pi0(i) == 0.0) continue;
        const double nt = strategy.nontarget_prob(i);
        int lo = k, hi = k;
        if (nt >= 1.0) {
            lo = hi = n;
        } else if (nt > 0.0) {
            hi = n;
        }
        for (int c = lo; c <= hi; ++c) {
            worst_on_path = std::min(worst_on_path, payoff[static_cast<size_t>(c)]);
        }
    }
    check.sender_deviation_gain = best - worst_on_path;
    return check;
}

}  // namespace persuasion
