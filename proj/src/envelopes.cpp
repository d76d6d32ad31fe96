#include "persuasion/envelopes.hpp"

#include <algorithm>
#include <cmath>

namespace persuasion {

double value_function(const Game& game, const FiniteBelief& belief) {
    if (!game.sender_utility) {
        throw NonSeparableGame("game does not declare a per-receiver sender utility");
    }
    double best = -std::numeric_limits<double>::infinity();
    for (double action : br_set(game, belief)) {
        best = std::max(best, game.sender_utility(action));
    }
    return best;
}

namespace {

void require_binary(const Game& game) {
    if (game.states.size() != 2) {
        throw NonBinaryStateSpace("value curves require a binary state space");
    }
}

double v0_at(const Game& game, double p) {
    return value_function(game, FiniteBelief::binary(p));
}

/// Left-limit value of v0 at a breakpoint of a finite-action game: among the
/// actions optimal at b, only those whose expected utility rises fastest when
/// moving left stay optimal just left of b.
double finite_side_limit(const Game& game, double b, int side) {
    const Eigen::VectorXd expected =
        game.receiver_utils.col(0) * b + game.receiver_utils.col(1) * (1.0 - b);
    const double best = expected.maxCoeff();
    double best_slope = -std::numeric_limits<double>::infinity();
    for (Eigen::Index a = 0; a < expected.size(); ++a) {
        if (expected(a) < best - kBrTieTolerance) continue;
        const double slope = side * (game.receiver_utils(a, 0) - game.receiver_utils(a, 1));
        best_slope = std::max(best_slope, slope);
    }
    double value = -std::numeric_limits<double>::infinity();
    for (Eigen::Index a = 0; a < expected.size(); ++a) {
        if (expected(a) < best - kBrTieTolerance) continue;
        const double slope = side * (game.receiver_utils(a, 0) - game.receiver_utils(a, 1));
        if (slope >= best_slope - 1e-12) {
            value = std::max(value, game.sender_utility(game.action_values(a)));
        }
    }
    return value;
}

std::pair<double, double> breakpoint_values(const Game& game, double b) {
    if (game.finite_actions()) {
        const double left = finite_side_limit(game, b, -1);
        const double right = finite_side_limit(game, b, +1);
        return {left, std::max(right, v0_at(game, b))};
    }
    // Interval-action games in this library have continuous best responses.
    const double v = v0_at(game, b);
    return {v, v};
}

}  // namespace

ValueCurve sample_curve(const Game& game, int resolution) {
    require_binary(game);
    if (resolution < 2) throw InvalidParams("resolution must be at least 2");

    std::vector<double> coords;
    coords.reserve(static_cast<size_t>(resolution) + game.br_breakpoints.size());
    for (int i = 0; i < resolution; ++i) {
        coords.push_back(static_cast<double>(i) / (resolution - 1));
    }
    coords.insert(coords.end(), game.br_breakpoints.begin(), game.br_breakpoints.end());
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-15; }),
                 coords.end());

    ValueCurve curve;
    curve.breakpoints = game.br_breakpoints;
    auto is_breakpoint = [&](double p) {
        return std::any_of(game.br_breakpoints.begin(), game.br_breakpoints.end(),
                           [p](double b) { return std::abs(b - p) < 1e-15; });
    };
    for (double p : coords) {
        if (is_breakpoint(p) && p > 0.0 && p < 1.0) {
            auto [left, right] = breakpoint_values(game, p);
            curve.grid.push_back(p);
            curve.values.push_back(left);
            curve.grid.push_back(p);
            curve.values.push_back(right);
        } else {
            curve.grid.push_back(p);
            curve.values.push_back(v0_at(game, p));
        }
    }
    return curve;
}

EquilibriumValueReport sender_optimal_value(const Game& game, double p0, double gamma0,
                                            int resolution) {
    require_binary(game);
    const ValueCurve curve = sample_curve(game, resolution);
    const ValueCurve qc = qconv_envelope(curve);
    const ValueCurve cv = conv_envelope(curve);

    EquilibriumValueReport report;
    report.v0_at_prior = v0_at(game, p0);
    report.qconv_at_prior = qc.value_at(p0);
    auto [v_star, witness] = attain_operator(qc, gamma0, p0);
    report.v_star = v_star;
    report.witness_p = witness;
    report.v_star_star = attain_operator(cv, gamma0, p0).first;
    report.benefit_excess_audience = report.v_star - report.qconv_at_prior;
    report.benefit_private_communication = report.benefit_excess_audience;
    return report;
}

double commitment_value(const Game& game, double p0, double gamma0, int resolution) {
    require_binary(game);
    const ValueCurve cv = conv_envelope(sample_curve(game, resolution));
    return attain_operator(cv, gamma0, p0).first;
}

double benefit_excess_audience(const Game& game, double p0, double gamma0, int resolution) {
    return sender_optimal_value(game, p0, gamma0, resolution).benefit_excess_audience;
}

bool effective_transmission_possible(const Game& game, double p0, double gamma0,
                                     int resolution) {
    const EquilibriumValueReport report = sender_optimal_value(game, p0, gamma0, resolution);
    return report.v_star > report.v0_at_prior + 1e-9;
}

}  // namespace persuasion
