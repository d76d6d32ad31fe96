#pragma once

#include <utility>
#include <vector>

#include "persuasion/belief.hpp"
#include "persuasion/piecewise.hpp"

namespace persuasion {

/// Largest state space accepted by the subset enumeration routines.
inline constexpr int kMaxEnumerableStates = 20;

/// Relative slack on the ratio test nu_lo >= gamma * nu_hi, so boundary
/// points (which hold the constraint with equality) count as attainable.
inline constexpr double kAttainTolerance = 1e-9;

/// Closed interval of attainable probabilities of the high state when the
/// state space is binary.
struct BinaryInterval {
    double lo = 0.0;
    double hi = 1.0;

    bool contains(double p) const { return lo <= p && p <= hi; }
};

/// Vertex representation of the set of gamma-attainable posteriors around a
/// prior. The prior itself is always a member and is kept in the vertex list.
struct AttainablePolytope {
    FiniteBelief prior;
    double gamma = 1.0;
    std::vector<FiniteBelief> vertices;
};

/// Membership test: true iff pi is absolutely continuous w.r.t. pi0 and the
/// likelihood ratios pi/pi0 over supp(pi0) satisfy min >= gamma * max, up to
/// kAttainTolerance. Absolute-continuity failure returns false.
bool is_attainable(const FiniteBelief& pi, const FiniteBelief& pi0, double gamma);

/// Brute-force oracle: checks pi0(E) pi(E') >= gamma pi0(E') pi(E) over all
/// ordered pairs of events. Exponential in the state count; capped at
/// kMaxEnumerableStates.
bool is_attainable_eventpair(const FiniteBelief& pi, const FiniteBelief& pi0, double gamma);

/// Closed-form attainable interval for a binary state space:
/// [p0 / (p0 + (1-p0)/gamma), p0 / (p0 + (1-p0) gamma)].
BinaryInterval binary_interval(double p0, double gamma);

/// All polytope vertices from two-block likelihood partitions of supp(pi0):
/// for each nonempty subset E+ of the support, the belief proportional to
/// pi0 on E+ and to gamma*pi0 off E+. Deduplicated; includes the prior.
AttainablePolytope extreme_points(const FiniteBelief& pi0, double gamma);

/// Maximum of a linear objective over the attainable polytope, evaluated at
/// the vertices. Ties go to the earliest vertex in enumeration order.
std::pair<double, FiniteBelief> maximize_linear(const FiniteBelief& pi0, double gamma,
                                                const Eigen::VectorXd& weights);

/// Result of maximizing the expected state over gamma-attainable posteriors
/// of the uniform prior on [0,1].
struct UniformMaxExpectedState {
    double theta1 = 0.5;           ///< switch point of the optimal two-level density
    double value = 0.5;            ///< maximum expected state, equals theta1
    PiecewiseDensity density;      ///< the optimal posterior density
};

/// Closed form: theta1 = value = 1 / (1 + sqrt(gamma)); optimal density has
/// level gamma*c0 below theta1 and c0 above, c0 = 1/(gamma*theta1 + 1 - theta1).
UniformMaxExpectedState max_expected_state_uniform(double gamma);

/// Largest gamma at which pi_star is attainable from pi0: the ratio
/// nu_lo / nu_hi of the likelihood-ratio bounds. Requires common support.
double first_best_threshold(const FiniteBelief& pi0, const FiniteBelief& pi_star);

}  // namespace persuasion
