#include "persuasion/io.hpp"

#include <sstream>

namespace persuasion {

namespace {

double number_or(const json& object, const char* key, double fallback) {
    if (!object.contains(key)) return fallback;
    if (!object.at(key).is_number()) {
        throw ConfigError(std::string("field '") + key + "' must be a number");
    }
    return object.at(key).get<double>();
}

int int_or(const json& object, const char* key, int fallback) {
    if (!object.contains(key)) return fallback;
    if (!object.at(key).is_number_integer()) {
        throw ConfigError(std::string("field '") + key + "' must be an integer");
    }
    return object.at(key).get<int>();
}

}  // namespace

json belief_to_json(const FiniteBelief& belief) {
    json array = json::array();
    for (int i = 0; i < belief.size(); ++i) array.push_back(belief(i));
    return array;
}

FiniteBelief belief_from_json(const json& array, const StateSpace& space) {
    if (!array.is_array() || static_cast<int>(array.size()) != space.size()) {
        throw ConfigError("belief must be an array matching the state space size");
    }
    Eigen::VectorXd probs(space.size());
    for (int i = 0; i < space.size(); ++i) probs(i) = array.at(static_cast<size_t>(i)).get<double>();
    return FiniteBelief(space, std::move(probs));
}

json density_to_json(const PiecewiseDensity& density) {
    return json{{"breakpoints", density.breakpoints()}, {"densities", density.densities()}};
}

PiecewiseDensity density_from_json(const json& object) {
    if (!object.contains("breakpoints") || !object.contains("densities")) {
        throw ConfigError("density needs 'breakpoints' and 'densities' arrays");
    }
    return PiecewiseDensity(object.at("breakpoints").get<std::vector<double>>(),
                            object.at("densities").get<std::vector<double>>());
}

json interval_to_json(const BinaryInterval& interval) {
    return json{{"lo", interval.lo}, {"hi", interval.hi}};
}

json polytope_to_json(const AttainablePolytope& polytope) {
    json vertices = json::array();
    for (const FiniteBelief& vertex : polytope.vertices) {
        vertices.push_back(belief_to_json(vertex));
    }
    return json{{"gamma", polytope.gamma},
                {"prior", belief_to_json(polytope.prior)},
                {"vertices", vertices}};
}

std::string polytope_to_csv(const AttainablePolytope& polytope) {
    std::ostringstream out;
    out.precision(17);
    for (int i = 0; i < polytope.prior.size(); ++i) {
        out << (i ? "," : "") << "p" << i;
    }
    out << "\n";
    for (const FiniteBelief& vertex : polytope.vertices) {
        for (int i = 0; i < vertex.size(); ++i) {
            out << (i ? "," : "") << vertex(i);
        }
        out << "\n";
    }
    return out.str();
}

json report_to_json(const SimReport& report) {
    json extra = json::object();
    for (const auto& [key, value] : report.extra) extra[key] = value;
    return json{{"rng_algorithm", report.rng_algorithm},
                {"seed", report.seed},
                {"trials", report.trials},
                {"mean_sender_payoff", report.mean_sender_payoff},
                {"win_rate", report.win_rate},
                {"empirical_posterior_error", report.empirical_posterior_error},
                {"martingale_error", report.martingale_error},
                {"min_persuaded_count", report.min_persuaded_count},
                {"extra", extra}};
}

json check_to_json(const EquilibriumCheck& check) {
    return json{{"receiver_br_ok", check.receiver_br_ok},
                {"sender_deviation_gain", check.sender_deviation_gain},
                {"tolerance", check.tolerance},
                {"certified", check.certified()}};
}

json values_to_json(const EquilibriumValueReport& report) {
    return json{{"v0_at_prior", report.v0_at_prior},
                {"qconv_at_prior", report.qconv_at_prior},
                {"v_star", report.v_star},
                {"v_star_star", report.v_star_star},
                {"benefit_excess_audience", report.benefit_excess_audience},
                {"benefit_private_communication", report.benefit_private_communication},
                {"witness_belief", belief_to_json(report.witness_belief())}};
}

std::string curve_bundle_csv(const Game& game, int resolution,
                             const std::vector<double>& gammas) {
    const ValueCurve curve = sample_curve(game, resolution);
    const ValueCurve qc = qconv_envelope(curve);
    const ValueCurve cv = conv_envelope(curve);
    const double gamma_primary = gammas.empty() ? 1.0 : gammas.front();

    std::ostringstream out;
    out.precision(6);
    out << "p,v0,qconv,conv";
    for (double gamma : gammas) out << ",attain_qconv_gamma" << gamma;
    out << ",attain_conv_gamma" << gamma_primary << "\n";
    out.precision(17);
    for (size_t i = 0; i < curve.size(); ++i) {
        const double p = curve.grid[i];
        out << p << "," << curve.values[i] << "," << qc.values[i] << "," << cv.values[i];
        for (double gamma : gammas) {
            out << "," << attain_operator(qc, gamma, p).first;
        }
        out << "," << attain_operator(cv, gamma_primary, p).first << "\n";
    }
    return out.str();
}

ExperimentConfig parse_config(const json& document) {
    if (!document.is_object()) throw ConfigError("config must be a JSON object");
    ExperimentConfig config;
    if (document.contains("command")) config.command = document.at("command").get<std::string>();
    if (document.contains("game")) {
        if (!document.at("game").is_object()) {
            throw ConfigError("'game' must be an object with a 'game' discriminator");
        }
        config.game = document.at("game");
    }
    if (document.contains("out")) config.out = document.at("out").get<std::string>();
    if (document.contains("seed")) config.seed = document.at("seed").get<uint64_t>();
    config.trials = int_or(document, "trials", config.trials);
    config.resolution = int_or(document, "resolution", config.resolution);
    if (document.contains("gamma0")) config.gamma0 = document.at("gamma0").get<double>();
    if (document.contains("prior")) {
        config.prior = document.at("prior").get<std::vector<double>>();
    }
    if (document.contains("target")) {
        config.target = document.at("target").get<std::vector<double>>();
    }
    if (document.contains("uniform")) config.uniform_prior = document.at("uniform").get<bool>();
    config.theta_grid = int_or(document, "theta_grid", config.theta_grid);
    if (document.contains("n")) config.n = int_or(document, "n", 0);
    if (document.contains("n0")) config.n0 = int_or(document, "n0", 0);
    return config;
}

ElectionParams election_params_from_json(const json& game) {
    ElectionParams params;
    params.p0 = number_or(game, "p0", params.p0);
    params.eta = number_or(game, "eta", params.eta);
    params.gamma = number_or(game, "gamma", params.gamma);
    params.validate();
    return params;
}

BookieParams bookie_params_from_json(const json& game) {
    BookieParams params;
    params.w = number_or(game, "w", params.w);
    params.eta = number_or(game, "eta", params.eta);
    params.rho0 = number_or(game, "rho0", params.rho0);
    params.rho1 = number_or(game, "rho1", params.rho1);
    params.validate();
    return params;
}

CrowdfundParams crowdfund_params_from_json(const json& game) {
    CrowdfundParams params;
    params.w = number_or(game, "w", params.w);
    params.rho = number_or(game, "rho", params.rho);
    params.eta_threshold = number_or(game, "eta_threshold", params.eta_threshold);
    params.n = int_or(game, "n", params.n);
    params.validate();
    return params;
}

QuadraticCSParams cs_params_from_json(const json& game) {
    QuadraticCSParams params;
    params.b = number_or(game, "b", params.b);
    params.n = int_or(game, "n", params.n);
    params.n0 = int_or(game, "n0", params.n0);
    params.K = int_or(game, "K", params.K);
    params.validate();
    return params;
}

}  // namespace persuasion
