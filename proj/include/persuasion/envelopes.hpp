#pragma once

#include "persuasion/games.hpp"
#include "persuasion/value_curve.hpp"

namespace persuasion {

inline constexpr int kDefaultCurveResolution = 2001;

/// Headline sender values at a prior. The ordering
/// v0_at_prior <= qconv_at_prior <= v_star <= v_star_star always holds, and
/// benefit_excess_audience = v_star - qconv_at_prior >= 0.
struct EquilibriumValueReport {
    double v0_at_prior = 0.0;
    double qconv_at_prior = 0.0;
    double v_star = 0.0;        ///< best cheap-talk equilibrium payoff
    double v_star_star = 0.0;   ///< best commitment payoff
    double benefit_excess_audience = 0.0;
    double benefit_private_communication = 0.0;
    double witness_p = 0.0;     ///< attainable belief parameter achieving v_star

    FiniteBelief witness_belief() const { return FiniteBelief::binary(witness_p); }
};

/// Sender's value function: best per-receiver payoff when every receiver
/// best-responds to `belief`, ties resolved in the sender's favor.
double value_function(const Game& game, const FiniteBelief& belief);

/// v0 on a uniform grid of `resolution` points plus the game's BR switch
/// points, each inserted twice with left-limit and at-point values.
ValueCurve sample_curve(const Game& game, int resolution = kDefaultCurveResolution);

/// Best cheap-talk equilibrium payoff and the full value report:
/// v_star = attain(qconv v0) and v_star_star = attain(conv v0) at the prior.
EquilibriumValueReport sender_optimal_value(const Game& game, double p0, double gamma0,
                                            int resolution = kDefaultCurveResolution);

/// Best payoff when the sender commits to the communication strategy before
/// learning the state: attain(conv v0) at the prior.
double commitment_value(const Game& game, double p0, double gamma0,
                        int resolution = kDefaultCurveResolution);

/// v_star minus the best payoff without an excess audience (qconv v0 at the
/// prior). Always nonnegative and non-increasing in gamma0.
double benefit_excess_audience(const Game& game, double p0, double gamma0,
                               int resolution = kDefaultCurveResolution);

/// True iff some equilibrium pays strictly more than acting on the prior.
bool effective_transmission_possible(const Game& game, double p0, double gamma0,
                                     int resolution = kDefaultCurveResolution);

}  // namespace persuasion
