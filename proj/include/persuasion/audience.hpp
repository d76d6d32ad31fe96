#pragma once

#include "persuasion/errors.hpp"

namespace persuasion {

/// Receiver count n and pivotal count n0. The sender's payoff depends only on
/// the top n0 actions; 0 < n0 < n means there is an excess audience.
struct AudienceSpec {
    int n = 1;
    int n0 = 1;

    AudienceSpec() = default;
    AudienceSpec(int n_, int n0_) : n(n_), n0(n0_) {
        if (n <= 0 || n0 < 0 || n0 > n) {
            throw InvalidParams("audience requires 0 <= n0 <= n and n > 0");
        }
    }

    double gamma0() const { return static_cast<double>(n0) / static_cast<double>(n); }
    bool excess_audience() const { return n0 > 0 && n0 < n; }
};

}  // namespace persuasion
