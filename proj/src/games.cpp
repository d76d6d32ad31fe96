#include "persuasion/games.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace persuasion {

void ElectionParams::validate() const {
    if (!(p0 > 0.0 && p0 < 1.0 && eta > 0.0 && eta < 1.0 && gamma > 0.0 && gamma < 1.0)) {
        throw InvalidParams("election parameters must lie in (0, 1)");
    }
}

void BookieParams::validate() const {
    if (!(w > 0.0 && eta > 1.0 && rho0 > 0.0 && rho1 > 0.0 && rho0 * rho1 < 1.0)) {
        throw InvalidParams("bookie requires w > 0, eta > 1, rho0, rho1 > 0, rho0*rho1 < 1");
    }
}

void CrowdfundParams::validate() const {
    if (!(w > 0.0 && rho > 0.0 && eta_threshold > 0.0 && n >= 2)) {
        throw InvalidParams("crowdfund requires w, rho, eta_threshold > 0 and n >= 2");
    }
}

void QuadraticCSParams::validate() const {
    if (!(b > 0.25)) throw InvalidParams("quadratic-loss bias must exceed 1/4");
    if (K < 1 || n0 < 1 || n <= n0) {
        throw InvalidParams("quadratic-loss game requires K >= 1 and 0 < n0 < n");
    }
}

std::vector<double> br_set(const Game& game, const FiniteBelief& belief) {
    if (!(belief.space() == game.states)) {
        throw DimensionMismatch("belief state space differs from the game's");
    }
    if (game.finite_actions()) {
        const Eigen::VectorXd expected = game.receiver_utils * belief.probs();
        const double best = expected.maxCoeff();
        std::vector<double> actions;
        for (Eigen::Index a = 0; a < expected.size(); ++a) {
            if (expected(a) >= best - kBrTieTolerance) {
                actions.push_back(game.action_values(a));
            }
        }
        return actions;
    }
    return {game.interval_br(belief(0))};
}

std::vector<double> br_set(const Game& game, const PiecewiseDensity& belief) {
    if (game.finite_actions()) {
        throw InvalidParams("continuous-state beliefs need a closed-form best response");
    }
    return {game.interval_br(belief.mean())};
}

bool election_win_attainable(const ElectionParams& params, double gamma0) {
    params.validate();
    const double lhs = params.eta / (1.0 - params.eta);
    const double rhs = (params.p0 / (1.0 - params.p0)) / gamma0;
    return lhs < rhs;
}

double bookie_br(const BookieParams& params, double p) {
    params.validate();
    if (p >= 1.0 / (1.0 + params.rho1)) {
        return (params.w / params.rho1) * ((1.0 + params.rho1) * p - 1.0);
    }
    if (p <= params.rho0 / (1.0 + params.rho0)) {
        return -(params.w / params.rho0) * ((1.0 + params.rho0) * (1.0 - p) - 1.0);
    }
    return 0.0;
}

double crowdfund_br(const CrowdfundParams& params, double mean_theta) {
    return std::max(0.0, (params.w / params.rho) * (mean_theta * (1.0 + params.rho) - 1.0));
}

double cs_sender_loss(const QuadraticCSParams& params, double theta,
                      const std::vector<double>& top_actions) {
    if (static_cast<int>(top_actions.size()) != params.n0) {
        throw LengthMismatch("expected exactly n0 actions");
    }
    double loss = 0.0;
    for (double a : top_actions) {
        const double gap = theta + params.b - a;
        loss += gap * gap;
    }
    return -loss / params.n0;
}

namespace {

/// Best-response switch points of a binary-state finite game: pairwise
/// expected-utility crossings at which the arg max set actually changes.
std::vector<double> finite_game_breakpoints(const Eigen::MatrixXd& utils) {
    const Eigen::Index A = utils.rows();
    std::set<double> candidates;
    for (Eigen::Index a = 0; a < A; ++a) {
        for (Eigen::Index b = a + 1; b < A; ++b) {
            const double slope_gap = (utils(a, 0) - utils(a, 1)) - (utils(b, 0) - utils(b, 1));
            if (slope_gap == 0.0) continue;
            const double p = (utils(b, 1) - utils(a, 1)) / slope_gap;
            if (p > 0.0 && p < 1.0) candidates.insert(p);
        }
    }

    auto argmax_signature = [&](double p) {
        Eigen::VectorXd expected = utils.col(0) * p + utils.col(1) * (1.0 - p);
        const double best = expected.maxCoeff();
        std::vector<int> sig;
        for (Eigen::Index a = 0; a < A; ++a) {
            if (expected(a) >= best - kBrTieTolerance) sig.push_back(static_cast<int>(a));
        }
        return sig;
    };

    std::vector<double> sorted(candidates.begin(), candidates.end());
    std::vector<double> cuts{0.0};
    cuts.insert(cuts.end(), sorted.begin(), sorted.end());
    cuts.push_back(1.0);

    std::vector<double> breakpoints;
    for (size_t i = 1; i + 1 < cuts.size(); ++i) {
        const double left_mid = 0.5 * (cuts[i - 1] + cuts[i]);
        const double right_mid = 0.5 * (cuts[i] + cuts[i + 1]);
        if (argmax_signature(left_mid) != argmax_signature(right_mid)) {
            breakpoints.push_back(cuts[i]);
        }
    }
    return breakpoints;
}

}  // namespace

Game make_finite_game(std::string name, StateSpace states, Eigen::VectorXd action_values,
                      Eigen::MatrixXd receiver_utils,
                      std::function<double(double)> sender_utility,
                      const AudienceSpec& audience) {
    if (receiver_utils.rows() != action_values.size() ||
        receiver_utils.cols() != states.size()) {
        throw DimensionMismatch("utility table shape differs from actions x states");
    }
    Game game;
    game.name = std::move(name);
    game.states = std::move(states);
    game.audience = audience;
    game.action_values = std::move(action_values);
    game.receiver_utils = std::move(receiver_utils);
    game.sender_utility = std::move(sender_utility);
    if (game.states.size() == 2) {
        game.br_breakpoints = finite_game_breakpoints(game.receiver_utils);
    }
    const auto u = game.sender_utility;
    const int n0 = audience.n0;
    game.profile_payoff = [u, n0](std::vector<double> actions) {
        if (n0 == 0) return 0.0;
        std::sort(actions.begin(), actions.end(), std::greater<>());
        double acc = 0.0;
        for (int i = 0; i < n0; ++i) acc += u(actions[static_cast<size_t>(i)]);
        return acc / n0;
    };
    return game;
}

Game make_election_game(const ElectionParams& params, int n, int n0) {
    params.validate();
    if (n0 < 0) {
        n0 = static_cast<int>(std::ceil(static_cast<double>(n) * params.gamma - 1e-12));
    }
    Eigen::VectorXd actions(2);
    actions << 0.0, 1.0;
    Eigen::MatrixXd utils(2, 2);
    // Voting yes pays theta - eta in expectation; abstaining pays 0.
    utils << 0.0, 0.0, 1.0 - params.eta, -params.eta;
    Game game = make_finite_game("election", StateSpace::binary(), std::move(actions),
                                 std::move(utils), [](double a) { return a; },
                                 AudienceSpec(n, n0));
    // Winning means the n0-th highest action is a vote for the sender.
    game.profile_payoff = [n0](std::vector<double> actions_) {
        if (n0 == 0) return 1.0;
        std::nth_element(actions_.begin(), actions_.begin() + (n0 - 1), actions_.end(),
                         std::greater<>());
        return actions_[static_cast<size_t>(n0 - 1)] >= 0.5 ? 1.0 : 0.0;
    };
    return game;
}

Game make_bookie_game(const BookieParams& params, const AudienceSpec& audience) {
    params.validate();
    Game game;
    game.name = "bookie";
    game.states = StateSpace::binary();
    game.audience = audience;
    game.monotone_sender_utility = false;  // the sender values both tails of the bets
    game.interval_br = [params](double p) { return bookie_br(params, p); };
    const double eta = params.eta;
    game.sender_utility = [eta](double a) { return a > 0.0 ? eta * a : -a; };
    game.br_breakpoints = {params.rho0 / (1.0 + params.rho0), 1.0 / (1.0 + params.rho1)};
    const auto u = game.sender_utility;
    const int n0 = audience.n0;
    game.profile_payoff = [u, n0](std::vector<double> actions) {
        if (n0 == 0) return 0.0;
        // The bookie handles the n0 most valuable bets.
        std::vector<double> value(actions.size());
        std::transform(actions.begin(), actions.end(), value.begin(), u);
        std::sort(value.begin(), value.end(), std::greater<>());
        double acc = 0.0;
        for (int i = 0; i < n0; ++i) acc += value[static_cast<size_t>(i)];
        return acc / n0;
    };
    return game;
}

Game make_crowdfund_game(const CrowdfundParams& params, int n_prime) {
    params.validate();
    Game game;
    game.name = "crowdfund";
    game.states = StateSpace::binary();  // placeholder; this game acts on densities
    game.audience = AudienceSpec(params.n, n_prime);
    game.separable = false;  // payoff is the backing indicator, not a per-receiver sum
    game.interval_br = [params](double mean_theta) { return crowdfund_br(params, mean_theta); };
    const double eta = params.eta_threshold;
    game.profile_payoff = [eta](std::vector<double> pledges) {
        double total = 0.0;
        for (double a : pledges) total += a;
        return total >= eta ? 1.0 : 0.0;
    };
    return game;
}

}  // namespace persuasion
