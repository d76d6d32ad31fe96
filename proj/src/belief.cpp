#include "persuasion/belief.hpp"

#include <cmath>
#include <set>

namespace persuasion {

StateSpace::StateSpace(std::vector<std::string> labels, std::optional<Eigen::VectorXd> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
    if (labels_.size() < 2) {
        throw InvalidParams("state space needs at least two states");
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) {
        throw InvalidParams("state labels must be unique");
    }
    if (values_ && values_->size() != static_cast<Eigen::Index>(labels_.size())) {
        throw DimensionMismatch("state values length differs from label count");
    }
}

StateSpace StateSpace::binary() {
    Eigen::VectorXd v(2);
    v << 1.0, 0.0;
    return StateSpace({"1", "0"}, v);
}

const Eigen::VectorXd& StateSpace::values() const {
    if (!values_) {
        throw MissingStateValues("state space has no numeric values");
    }
    return *values_;
}

bool StateSpace::operator==(const StateSpace& other) const {
    if (labels_ != other.labels_) return false;
    if (values_.has_value() != other.values_.has_value()) return false;
    if (values_ && *values_ != *other.values_) return false;
    return true;
}

FiniteBelief::FiniteBelief(StateSpace space, Eigen::VectorXd probs)
    : space_(std::move(space)), probs_(std::move(probs)) {
    if (probs_.size() != space_.size()) {
        throw DimensionMismatch("belief length differs from state space size");
    }
    if ((probs_.array() < 0.0).any()) {
        throw InvalidParams("belief has a negative entry");
    }
    if (std::abs(probs_.sum() - 1.0) > kProbTolerance) {
        throw InvalidParams("belief does not sum to one");
    }
}

FiniteBelief FiniteBelief::binary(double p) {
    Eigen::VectorXd v(2);
    v << p, 1.0 - p;
    return FiniteBelief(StateSpace::binary(), v);
}

std::vector<int> FiniteBelief::support() const {
    std::vector<int> idx;
    for (int i = 0; i < size(); ++i) {
        if (probs_(i) != 0.0) idx.push_back(i);
    }
    return idx;
}

bool FiniteBelief::absolutely_continuous_wrt(const FiniteBelief& reference) const {
    for (int i = 0; i < size(); ++i) {
        if (probs_(i) > 0.0 && reference(i) == 0.0) return false;
    }
    return true;
}

FiniteBelief bayes_update(const FiniteBelief& prior, const Eigen::VectorXd& likelihood) {
    if (likelihood.size() != prior.size()) {
        throw DimensionMismatch("likelihood length differs from belief length");
    }
    Eigen::VectorXd joint = prior.probs().cwiseProduct(likelihood);
    const double normalizer = joint.sum();
    if (normalizer <= 0.0) {
        throw ZeroProbabilityMessage("message has zero probability under the prior");
    }
    return FiniteBelief(prior.space(), joint / normalizer);
}

std::pair<double, double> likelihood_ratio_bounds(const FiniteBelief& pi,
                                                  const FiniteBelief& pi0) {
    if (pi.size() != pi0.size()) {
        throw DimensionMismatch("beliefs live on different state spaces");
    }
    if (!pi.absolutely_continuous_wrt(pi0)) {
        throw NotAbsolutelyContinuous("pi is not absolutely continuous w.r.t. pi0");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < pi0.size(); ++i) {
        if (pi0(i) == 0.0) continue;  // a.s. qualifier: ratios taken on supp(pi0) only
        const double ratio = pi(i) / pi0(i);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return {lo, hi};
}

FiniteBelief mix(const std::vector<FiniteBelief>& beliefs, const Eigen::VectorXd& weights) {
    if (beliefs.empty() || weights.size() != static_cast<Eigen::Index>(beliefs.size())) {
        throw DimensionMismatch("weights length differs from belief count");
    }
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(beliefs.front().size());
    for (size_t j = 0; j < beliefs.size(); ++j) {
        if (beliefs[j].size() != acc.size()) {
            throw DimensionMismatch("beliefs live on different state spaces");
        }
        acc += weights(static_cast<Eigen::Index>(j)) * beliefs[j].probs();
    }
    return FiniteBelief(beliefs.front().space(), std::move(acc));
}

double expected_state(const FiniteBelief& belief) {
    return belief.space().values().dot(belief.probs());
}

}  // namespace persuasion
