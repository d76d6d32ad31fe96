#include "persuasion/attainable.hpp"

#include <bit>
#include <cmath>

namespace persuasion {

namespace {

void check_gamma(double gamma) {
    if (!(gamma > 0.0) || gamma > 1.0) {
        throw InvalidParams("gamma must lie in (0, 1]");
    }
}

void check_enumerable(const FiniteBelief& belief) {
    if (belief.size() > kMaxEnumerableStates) {
        throw StateSpaceTooLarge("state space too large for subset enumeration");
    }
}

}  // namespace

bool is_attainable(const FiniteBelief& pi, const FiniteBelief& pi0, double gamma) {
    check_gamma(gamma);
    if (pi.size() != pi0.size()) {
        throw DimensionMismatch("beliefs live on different state spaces");
    }
    if (!pi.absolutely_continuous_wrt(pi0)) return false;
    auto [nu_lo, nu_hi] = likelihood_ratio_bounds(pi, pi0);
    return nu_lo >= gamma * nu_hi - kAttainTolerance * nu_hi;
}

bool is_attainable_eventpair(const FiniteBelief& pi, const FiniteBelief& pi0, double gamma) {
    check_gamma(gamma);
    check_enumerable(pi0);
    if (pi.size() != pi0.size()) {
        throw DimensionMismatch("beliefs live on different state spaces");
    }
    const int n = pi0.size();
    const unsigned total = 1u << n;

    // Event masses for every subset of the state space.
    std::vector<double> mass0(total, 0.0), mass1(total, 0.0);
    for (unsigned e = 1; e < total; ++e) {
        const unsigned low_bit = e & (e - 1);
        const int state = std::countr_zero(e);
        mass0[e] = mass0[low_bit] + pi0(state);
        mass1[e] = mass1[low_bit] + pi(state);
    }

    for (unsigned e = 0; e < total; ++e) {
        for (unsigned f = 0; f < total; ++f) {
            if (mass0[e] * mass1[f] + kAttainTolerance < gamma * mass0[f] * mass1[e]) {
                return false;
            }
        }
    }
    return true;
}

BinaryInterval binary_interval(double p0, double gamma) {
    check_gamma(gamma);
    if (!(p0 > 0.0) || !(p0 < 1.0)) {
        throw DegeneratePrior("prior probability must lie in (0, 1)");
    }
    BinaryInterval interval;
    interval.lo = p0 / (p0 + (1.0 - p0) / gamma);
    interval.hi = p0 / (p0 + (1.0 - p0) * gamma);
    return interval;
}

AttainablePolytope extreme_points(const FiniteBelief& pi0, double gamma) {
    check_gamma(gamma);
    check_enumerable(pi0);
    const std::vector<int> support = pi0.support();
    const int s = static_cast<int>(support.size());

    AttainablePolytope polytope{pi0, gamma, {}};
    // Every nonempty subset of the support, the full set last so the prior
    // sits at the end of the vertex list.
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
        double normalizer = 0.0;
        for (int j = 0; j < s; ++j) {
            const double weight = (mask & (1u << j)) ? 1.0 : gamma;
            normalizer += weight * pi0(support[j]);
        }
        Eigen::VectorXd probs = Eigen::VectorXd::Zero(pi0.size());
        for (int j = 0; j < s; ++j) {
            const double weight = (mask & (1u << j)) ? 1.0 : gamma;
            probs(support[j]) = weight * pi0(support[j]) / normalizer;
        }
        FiniteBelief vertex(pi0.space(), std::move(probs));
        bool duplicate = false;
        for (const FiniteBelief& existing : polytope.vertices) {
            if ((existing.probs() - vertex.probs()).lpNorm<Eigen::Infinity>() <= 1e-12) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) polytope.vertices.push_back(std::move(vertex));
    }
    return polytope;
}

std::pair<double, FiniteBelief> maximize_linear(const FiniteBelief& pi0, double gamma,
                                                const Eigen::VectorXd& weights) {
    if (weights.size() != pi0.size()) {
        throw DimensionMismatch("weights length differs from state space size");
    }
    const AttainablePolytope polytope = extreme_points(pi0, gamma);
    const FiniteBelief* best = &polytope.vertices.front();
    double best_value = weights.dot(best->probs());
    for (const FiniteBelief& vertex : polytope.vertices) {
        const double value = weights.dot(vertex.probs());
        if (value > best_value) {
            best_value = value;
            best = &vertex;
        }
    }
    return {best_value, *best};
}

UniformMaxExpectedState max_expected_state_uniform(double gamma) {
    check_gamma(gamma);
    const double theta1 = 1.0 / (1.0 + std::sqrt(gamma));  // in [1/2, 1) for gamma in (0,1]
    const double c0 = 1.0 / (gamma * theta1 + 1.0 - theta1);
    PiecewiseDensity density({0.0, theta1, 1.0}, {gamma * c0, c0});
    return UniformMaxExpectedState{theta1, theta1, std::move(density)};
}

double first_best_threshold(const FiniteBelief& pi0, const FiniteBelief& pi_star) {
    if (!pi0.absolutely_continuous_wrt(pi_star)) {
        throw NotAbsolutelyContinuous("pi0 and pi_star must share a common support");
    }
    auto [nu_lo, nu_hi] = likelihood_ratio_bounds(pi_star, pi0);
    return nu_lo / nu_hi;
}

}  // namespace persuasion
