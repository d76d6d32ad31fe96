#include "persuasion/cs_partition.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "persuasion/rng.hpp"

namespace persuasion {

int PartitionStrategy::block_of(double theta) const {
    const int block = static_cast<int>(std::floor(theta * K)) + 1;
    return std::clamp(block, 1, K);
}

int PartitionStrategy::target_block_of(double theta) const {
    int best = 1;
    double best_gap = std::numeric_limits<double>::infinity();
    for (int block = 1; block <= K; ++block) {
        const double gap = std::abs(theta + b - block_midpoint(block));
        if (gap < best_gap - 1e-15) {
            best_gap = gap;
            best = block;
        }
    }
    return best;
}

double PartitionStrategy::block_midpoint(int block) const {
    return (2.0 * block - 1.0) / (2.0 * K);
}

PartitionStrategy make_partition_strategy(int K, double b, double gamma) {
    if (K < 1 || gamma < 0.0 || gamma >= 1.0) {
        throw InvalidParams("partition strategy requires K >= 1 and gamma in [0, 1)");
    }
    return PartitionStrategy{K, b, gamma};
}

PartitionStrategy build_cs_strategy(const QuadraticCSParams& params) {
    params.validate();
    return make_partition_strategy(params.K, params.b,
                                   static_cast<double>(params.n0) / params.n);
}

PiecewiseDensity cs_posterior(const PartitionStrategy& strategy, int block) {
    if (block < 1 || block > strategy.K) throw InvalidParams("block index out of range");

    // Candidate knots: block edges plus the edges of the lie preimages
    // {theta : target_block_of(theta) = m}, which sit at j/K - b.
    std::vector<double> knots{0.0, 1.0};
    for (int j = 1; j < strategy.K; ++j) {
        knots.push_back(static_cast<double>(j) / strategy.K);
        const double shifted = static_cast<double>(j) / strategy.K - strategy.b;
        if (shifted > 0.0 && shifted < 1.0) knots.push_back(shifted);
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end(),
                            [](double a, double c) { return std::abs(a - c) < 1e-15; }),
                knots.end());

    std::vector<double> levels(knots.size() - 1, 0.0);
    double mass = 0.0;
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
        const double mid = 0.5 * (knots[i] + knots[i + 1]);
        double level = 0.0;
        if (strategy.block_of(mid) == block) level += 1.0 - strategy.gamma;
        if (strategy.target_block_of(mid) == block) level += strategy.gamma;
        levels[i] = level;
        mass += level * (knots[i + 1] - knots[i]);
    }
    if (mass <= 0.0) {
        throw ZeroProbabilityMessage("block message has zero probability");
    }
    for (double& level : levels) level /= mass;
    return PiecewiseDensity(std::move(knots), std::move(levels));
}

namespace {

bool incentive_holds(const PartitionStrategy& strategy) {
    const int K = strategy.K;
    std::vector<double> means(static_cast<size_t>(K) + 1, 0.0);
    for (int block = 1; block <= K; ++block) {
        const double mean = cs_posterior(strategy, block).mean();
        means[static_cast<size_t>(block)] = mean;
        const double lo = static_cast<double>(block - 1) / K;
        const double hi = static_cast<double>(block) / K;
        if (mean < lo - 1e-12 || mean > hi + 1e-12) return false;
    }

    // The midpoint-based lie rule must agree with the argmin over posterior
    // means everywhere.
    constexpr int kGridCells = 2000;
    for (int i = 0; i < kGridCells; ++i) {
        const double theta = (i + 0.5) / kGridCells;
        int best = 1;
        double best_gap = std::numeric_limits<double>::infinity();
        for (int block = 1; block <= K; ++block) {
            const double gap = std::abs(theta + strategy.b - means[static_cast<size_t>(block)]);
            if (gap < best_gap - 1e-15) {
                best_gap = gap;
                best = block;
            }
        }
        if (best != strategy.target_block_of(theta)) return false;
    }
    return true;
}

}  // namespace

CsIncentiveResult cs_check_incentive(const PartitionStrategy& strategy, int n0, int n_max) {
    CsIncentiveResult result;
    result.ok = incentive_holds(strategy);
    for (int n = n0 + 1; n <= n_max; ++n) {
        PartitionStrategy candidate = strategy;
        candidate.gamma = static_cast<double>(n0) / n;
        if (incentive_holds(candidate)) {
            result.n_min = n;
            break;
        }
    }
    return result;
}

SimReport simulate_cs(const PartitionStrategy& strategy, const QuadraticCSParams& params,
                      int trials, uint64_t seed) {
    params.validate();
    if (trials <= 0) throw InvalidParams("trials must be positive");
    if (!incentive_holds(strategy)) {
        throw IncentiveCheckFailed("partition strategy fails the incentive check");
    }

    const int K = strategy.K;
    const int n = params.n;
    const int n0 = params.n0;

    std::vector<double> mean_by_block(static_cast<size_t>(K) + 1, 0.0);
    for (int block = 1; block <= K; ++block) {
        mean_by_block[static_cast<size_t>(block)] = cs_posterior(strategy, block).mean();
    }

    struct Outcome {
        double payoff = 0.0;
        bool reachable = false;  // theta + b <= 1
    };
    std::vector<Outcome> outcomes(static_cast<size_t>(trials));

    auto run_range = [&](int begin, int end) {
        std::vector<double> actions(static_cast<size_t>(n));
        std::vector<double> top(static_cast<size_t>(n0));
        for (int t = begin; t < end; ++t) {
            SplitMix64 rng = SplitMix64::substream(seed, static_cast<uint64_t>(t));
            const double theta = rng.next_double();
            const int truthful = strategy.block_of(theta);
            const int lie = strategy.target_block_of(theta);

            // Only target membership matters: n0 receivers get the lie block.
            for (int r = 0; r < n; ++r) {
                actions[static_cast<size_t>(r)] =
                    mean_by_block[static_cast<size_t>(r < n0 ? lie : truthful)];
            }
            std::partial_sort_copy(actions.begin(), actions.end(), top.begin(), top.end(),
                                   std::greater<>());
            Outcome& out = outcomes[static_cast<size_t>(t)];
            out.payoff = cs_sender_loss(params, theta, top);
            out.reachable = theta + params.b <= 1.0;
        }
    };

    const char* env = std::getenv("THREADS");
    const int threads = std::min(env ? std::max(1, std::atoi(env)) : 1, trials);
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

    SimReport report;
    report.rng_algorithm = kRngAlgorithm;
    report.seed = seed;
    report.trials = trials;
    report.min_persuaded_count = n0;

    double sum = 0.0, sum_reachable = 0.0, sum_boundary = 0.0;
    int64_t count_reachable = 0;
    for (const Outcome& out : outcomes) {
        sum += out.payoff;
        if (out.reachable) {
            sum_reachable += out.payoff;
            ++count_reachable;
        } else {
            sum_boundary += out.payoff;
        }
    }
    const int64_t count_boundary = trials - count_reachable;
    report.mean_sender_payoff = sum / trials;
    report.win_rate = 0.0;
    report.extra["mean_payoff_given_reachable"] =
        count_reachable > 0 ? sum_reachable / count_reachable : 0.0;
    report.extra["mean_payoff_given_boundary"] =
        count_boundary > 0 ? sum_boundary / count_boundary : 0.0;
    report.extra["bound_reachable"] = -1.0 / K;
    report.extra["bound_boundary_proof"] = -(params.b + 1.0 / K) * (params.b + 1.0 / K);
    report.extra["bound_boundary_statement"] = -params.b * params.b;
    return report;
}

}  // namespace persuasion
