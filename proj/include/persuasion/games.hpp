#pragma once

#include <functional>
#include <string>
#include <vector>

#include "persuasion/audience.hpp"
#include "persuasion/belief.hpp"
#include "persuasion/piecewise.hpp"

namespace persuasion {

/// Tie tolerance for best-response comparisons over finite action sets.
inline constexpr double kBrTieTolerance = 1e-10;

/// A persuasion game: states, actions, receiver utility, per-receiver sender
/// utility, and the audience. Finite-action games are described by utility
/// tables; interval-action games register a closed-form best response in the
/// probability of the high state (binary state spaces only).
struct Game {
    std::string name;
    StateSpace states{StateSpace::binary()};
    AudienceSpec audience{1, 1};

    bool separable = true;                 ///< per-receiver U_S is declared
    bool monotone_sender_utility = true;   ///< U_S strictly increasing

    // Finite-action description (action_values empty for interval games).
    Eigen::VectorXd action_values;
    Eigen::MatrixXd receiver_utils;        ///< rows: actions, cols: states

    // Interval-action description: best response given P(high state).
    std::function<double(double)> interval_br;

    std::function<double(double)> sender_utility;  ///< U_S(a) per receiver

    /// Best-response switch points in p, for binary state spaces.
    std::vector<double> br_breakpoints;

    /// Sender payoff from a full action profile (the game's top-n0 rule).
    std::function<double(std::vector<double>)> profile_payoff;

    bool finite_actions() const { return action_values.size() > 0; }
};

/// Election (p0: prior on state 1, eta: vote threshold, gamma: required
/// vote share).
struct ElectionParams {
    double p0 = 0.4;
    double eta = 0.5;
    double gamma = 0.5;

    void validate() const;
};

/// Bookie (w: wealth, eta: bet-volume weight > 1, rho0/rho1: net returns
/// with rho0 * rho1 < 1).
struct BookieParams {
    double w = 0.5;
    double eta = 1.4142135623730951;  // sqrt(2)
    double rho1 = 0.5;
    double rho0 = 0.2;

    void validate() const;
};

/// Crowdfunding (w: wealth, rho: net return, eta_threshold: backing
/// threshold, n: backers).
struct CrowdfundParams {
    double w = 1.0;
    double rho = 0.5;
    double eta_threshold = 2.0;
    int n = 96;

    void validate() const;
};

/// Quadratic-loss game with sender bias b > 1/4 and a K-block partition.
struct QuadraticCSParams {
    double b = 0.3;
    int n = 10;
    int n0 = 1;
    int K = 10;

    void validate() const;
};

/// Actions that maximize expected receiver utility under the belief. Finite
/// games return the full tie set (tolerance kBrTieTolerance); interval games
/// return the singleton closed-form response.
std::vector<double> br_set(const Game& game, const FiniteBelief& belief);

/// Interval-game best response at the mean of a continuous-state posterior.
std::vector<double> br_set(const Game& game, const PiecewiseDensity& belief);

/// Strict-inequality check of eta/(1-eta) < (1/gamma0) * p0/(1-p0).
bool election_win_attainable(const ElectionParams& params, double gamma0);

/// Three-branch closed-form bet in [-w, w].
double bookie_br(const BookieParams& params, double p);

/// Pledge max{0, (w/rho) * (mean_theta * (1+rho) - 1)}.
double crowdfund_br(const CrowdfundParams& params, double mean_theta);

/// Quadratic loss over the top-n0 actions: -(1/n0) sum (theta + b - a)^2.
double cs_sender_loss(const QuadraticCSParams& params, double theta,
                      const std::vector<double>& top_actions);

/// Game factories. Election and bookie games are binary-state; the election
/// pivotal count defaults to the smallest integer with n0/n >= gamma.
Game make_election_game(const ElectionParams& params, int n, int n0 = -1);
Game make_bookie_game(const BookieParams& params, const AudienceSpec& audience);
Game make_crowdfund_game(const CrowdfundParams& params, int n_prime);

/// Generic separable finite-action game from utility tables.
Game make_finite_game(std::string name, StateSpace states, Eigen::VectorXd action_values,
                      Eigen::MatrixXd receiver_utils,
                      std::function<double(double)> sender_utility,
                      const AudienceSpec& audience);

}  // namespace persuasion
