#pragma once

#include "persuasion/games.hpp"
#include "persuasion/piecewise.hpp"
#include "persuasion/simulate.hpp"

namespace persuasion {

/// Partition-based strategy for the quadratic-loss game: [0,1) is split into
/// K equal blocks; receivers outside the target are truthfully told the block
/// containing the state, targeted receivers are always told the block whose
/// midpoint is closest to theta + b.
struct PartitionStrategy {
    int K = 1;
    double b = 0.3;
    double gamma = 0.0;  ///< n0 / n

    /// Truthful block index (1-based) of theta in [0,1].
    int block_of(double theta) const;
    /// Block minimizing (theta + b - midpoint)^2, ties to the lower index.
    int target_block_of(double theta) const;
    double block_midpoint(int block) const;
};

PartitionStrategy make_partition_strategy(int K, double b, double gamma);

/// Strategy for the given game parameters with gamma = n0 / n.
PartitionStrategy build_cs_strategy(const QuadraticCSParams& params);

/// Exact posterior density after observing a block message: proportional to
/// (1-gamma) on the truthful preimage of the block plus gamma on its lie
/// preimage. Throws ZeroProbabilityMessage for off-path blocks.
PiecewiseDensity cs_posterior(const PartitionStrategy& strategy, int block);

struct CsIncentiveResult {
    bool ok = false;    ///< the strategy's own gamma passes both conditions
    int n_min = -1;     ///< smallest n (at fixed n0) passing, -1 if none found
};

/// Checks that every block's posterior mean lies in the block and that the
/// midpoint-based lie rule coincides with the argmin over posterior means on
/// a theta grid; searches n upward (at fixed n0) for the smallest n passing.
CsIncentiveResult cs_check_incentive(const PartitionStrategy& strategy, int n0 = 1,
                                     int n_max = 1 << 20);

/// Monte Carlo run of the partition strategy: receivers answer with posterior
/// means, the sender is scored by the quadratic loss over the top n0 actions.
/// Reports mean payoffs conditional on theta + b <= 1 and on theta + b > 1.
SimReport simulate_cs(const PartitionStrategy& strategy, const QuadraticCSParams& params,
                      int trials, uint64_t seed);

}  // namespace persuasion
