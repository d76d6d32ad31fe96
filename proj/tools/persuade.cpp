// Command-line front end: attainability queries, equilibrium value reports,
// value-curve bundles, and seeded simulations driven by a JSON config.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "persuasion/io.hpp"

namespace {

using namespace persuasion;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output path: " + path);
    out << content;
}

void write_json(const std::string& path, const json& document) {
    write_output(path, document.dump(2) + "\n");
}

int fail(const std::string& path, const std::vector<std::string>& failures) {
    write_json(path, json{{"failures", failures}});
    return 2;
}

std::string game_name(const ExperimentConfig& config) {
    if (!config.game.contains("game")) throw ConfigError("config needs a 'game' object");
    return config.game.at("game").get<std::string>();
}

Game build_value_game(const ExperimentConfig& config) {
    const std::string name = game_name(config);
    if (name == "election") {
        const ElectionParams params = election_params_from_json(config.game);
        return make_election_game(params, config.n.value_or(100), config.n0.value_or(-1));
    }
    if (name == "bookie") {
        const BookieParams params = bookie_params_from_json(config.game);
        const int n = config.n.value_or(3);
        const int n0 = config.n0.value_or(1);
        return make_bookie_game(params, AudienceSpec(n, n0));
    }
    throw ConfigError("command supports games 'election' and 'bookie', got '" + name + "'");
}

int cmd_attainable(const ExperimentConfig& config, const std::string& format) {
    if (config.uniform_prior) {
        const double gamma = config.gamma0.value_or(1.0);
        const UniformMaxExpectedState result = max_expected_state_uniform(gamma);
        write_json(config.out, json{{"gamma", gamma},
                                    {"theta1", result.theta1},
                                    {"max_expected_state", result.value},
                                    {"density", density_to_json(result.density)}});
        return 0;
    }
    if (!config.prior) {
        throw ConfigError("attainable needs a 'prior' array or 'uniform': true");
    }
    const std::vector<double>& prior_values = *config.prior;
    const double gamma = config.gamma0.value_or(1.0);

    std::vector<std::string> labels;
    for (size_t i = 0; i < prior_values.size(); ++i) labels.push_back("s" + std::to_string(i));
    Eigen::VectorXd probs(static_cast<Eigen::Index>(prior_values.size()));
    for (size_t i = 0; i < prior_values.size(); ++i) {
        probs(static_cast<Eigen::Index>(i)) = prior_values[i];
    }
    const FiniteBelief prior(StateSpace(labels), probs);
    const AttainablePolytope polytope = extreme_points(prior, gamma);

    if (format == "csv") {
        write_output(config.out, polytope_to_csv(polytope));
        return 0;
    }
    json document = polytope_to_json(polytope);
    if (prior.size() == 2) {
        document["interval"] = interval_to_json(binary_interval(prior(0), gamma));
    }
    write_json(config.out, document);
    return 0;
}

int cmd_values(const ExperimentConfig& config) {
    const Game game = build_value_game(config);
    const double p0 = number_or_throw(config);
    (void)p0;
    return 0;
}

double config_p0(const ExperimentConfig& config) {
    if (config.game.contains("p0")) return config.game.at("p0").get<double>();
    throw ConfigError("config game object needs 'p0'");
}

int run_values(const ExperimentConfig& config) {
    const Game game = build_value_game(config);
    const double p0 = config_p0(config);
    const double gamma0 = config.gamma0.value_or(game.audience.gamma0());
    const EquilibriumValueReport report =
        sender_optimal_value(game, p0, gamma0, config.resolution);
    json document = values_to_json(report);
    document["game"] = game.name;
    document["p0"] = p0;
    document["gamma0"] = gamma0;
    document["sender_utility_monotone"] = game.monotone_sender_utility;
    write_json(config.out, document);
    return 0;
}

int run_figure(const ExperimentConfig& config) {
    const std::string name = game_name(config);
    std::vector<double> gammas;
    if (config.game.contains("gamma0_list")) {
        gammas = config.game.at("gamma0_list").get<std::vector<double>>();
    } else if (config.gamma0) {
        gammas = {*config.gamma0};
    } else if (name == "bookie") {
        gammas = {1.0 / 3.0, 0.1};
    } else {
        gammas = {0.5};
    }
    const Game game = build_value_game(config);
    write_output(config.out, curve_bundle_csv(game, config.resolution, gammas));
    return 0;
}

struct ElectionRun {
    Game game;
    ElectionParams params{};
    TargetedStrategy strategy;
    FiniteBelief prior;
};

ElectionRun build_election_run(const ExperimentConfig& config) {
    const ElectionParams params = election_params_from_json(config.game);
    const int n = config.n.value_or(100);
    Game game = make_election_game(params, n, config.n0.value_or(-1));
    const int k = game.audience.n0;
    const FiniteBelief prior = FiniteBelief::binary(params.p0);

    FiniteBelief target = prior;
    if (config.target) {
        target = belief_from_json(json(*config.target), StateSpace::binary());
    } else {
        const BinaryInterval interval = binary_interval(params.p0, game.audience.gamma0());
        target = FiniteBelief::binary(interval.hi);
    }
    TargetedStrategy strategy = build_attaining_strategy(target, prior, n, k);
    return ElectionRun{std::move(game), params, std::move(strategy), prior};
}

int run_simulate(const ExperimentConfig& config) {
    const std::string name = game_name(config);
    std::vector<std::string> failures;

    if (name == "election") {
        ElectionRun run = [&] {
            try {
                return build_election_run(config);
            } catch (const NotAttainable& error) {
                throw;  // surfaced below with a machine-readable failure
            }
        }();
        const SimReport report =
            simulate(run.strategy, run.game, run.prior, config.trials, config.seed);
        json document = report_to_json(report);
        document["game"] = "election";

        if (report.min_persuaded_count < run.strategy.k) {
            failures.push_back("min_persuaded_count below target size");
        }
        if (report.empirical_posterior_error > 0.02) {
            failures.push_back("empirical posterior deviates from the analytic one");
        }
        if (report.martingale_error > 0.02) {
            failures.push_back("posterior mixture deviates from the prior");
        }
        const BinaryInterval interval =
            binary_interval(run.params.p0, run.game.audience.gamma0());
        if (interval.hi >= run.params.eta - 1e-12 && report.win_rate != 1.0) {
            failures.push_back("expected certain victory but win_rate < 1");
        }
        document["failures"] = failures;
        write_json(config.out, document);
        return failures.empty() ? 0 : 1;
    }

    if (name == "crowdfund") {
        const CrowdfundParams params = crowdfund_params_from_json(config.game);
        const CrowdfundStrategy strategy = crowdfund_equilibrium(params);
        const int per_theta = std::max(1, config.trials / std::max(1, config.theta_grid));
        const SimReport report =
            simulate_crowdfund(strategy, params, per_theta, config.theta_grid, config.seed);
        json document = report_to_json(report);
        document["game"] = "crowdfund";
        document["check"] = strategy.check;
        document["target_posterior"] = density_to_json(strategy.target_posterior);
        if (!strategy.check) failures.push_back("pledge bound check failed");
        if (report.win_rate != 1.0) failures.push_back("project not backed in every trial");
        document["failures"] = failures;
        write_json(config.out, document);
        return failures.empty() ? 0 : 1;
    }

    if (name == "quadratic_cs") {
        QuadraticCSParams params = cs_params_from_json(config.game);
        PartitionStrategy strategy = build_cs_strategy(params);
        const CsIncentiveResult incentive = cs_check_incentive(strategy, params.n0);
        if (!incentive.ok) {
            if (incentive.n_min < 0) {
                failures.push_back("no audience size passes the incentive check");
                return fail(config.out, failures);
            }
            params.n = incentive.n_min;
            strategy = build_cs_strategy(params);
        }
        const SimReport report = simulate_cs(strategy, params, config.trials, config.seed);
        json document = report_to_json(report);
        document["game"] = "quadratic_cs";
        document["n_used"] = params.n;
        document["n_min"] = incentive.n_min;
        const double slack = 0.01;
        if (report.extra.at("mean_payoff_given_reachable") <
            report.extra.at("bound_reachable") - slack) {
            failures.push_back("mean payoff below -1/K bound");
        }
        if (report.extra.at("mean_payoff_given_boundary") <
            report.extra.at("bound_boundary_proof") - slack) {
            failures.push_back("mean payoff below -(b+1/K)^2 bound");
        }
        document["failures"] = failures;
        write_json(config.out, document);
        return failures.empty() ? 0 : 1;
    }

    throw ConfigError("simulate supports 'election', 'crowdfund', 'quadratic_cs'");
}

int run_verify(const ExperimentConfig& config) {
    const std::string name = game_name(config);
    if (name != "election") {
        throw ConfigError("verify supports the 'election' game");
    }
    ElectionRun run = build_election_run(config);
    const EquilibriumCheck check =
        verify_equilibrium(run.strategy, run.game, run.prior, run.prior);
    json document = check_to_json(check);
    document["game"] = "election";
    write_json(config.out, document);
    return check.certified() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cheap-talk persuasion toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "json";
    std::optional<uint64_t> seed;
    std::optional<int> trials, resolution;
    std::optional<double> gamma0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config path");
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--trials", trials, "Monte Carlo trials");
        cmd->add_option("--resolution", resolution, "curve grid size");
        cmd->add_option("--gamma0", gamma0, "pivotal audience fraction");
    };

    CLI::App* attainable = app.add_subcommand("attainable", "attainable-posterior queries");
    attainable->add_option("--format", format, "output format: json or csv");
    CLI::App* values = app.add_subcommand("values", "equilibrium value report");
    CLI::App* figure = app.add_subcommand("figure", "value-curve CSV bundle");
    CLI::App* simulate_cmd = app.add_subcommand("simulate", "seeded Monte Carlo run");
    CLI::App* verify = app.add_subcommand("verify", "equilibrium certification");
    for (CLI::App* cmd : {attainable, values, figure, simulate_cmd, verify}) add_common(cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        persuasion::json document = persuasion::json::object();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw persuasion::ConfigError("cannot read config: " + config_path);
            try {
                document = persuasion::json::parse(in);
            } catch (const persuasion::json::parse_error& error) {
                throw persuasion::ConfigError(std::string("config parse error: ") +
                                              error.what());
            }
        }
        persuasion::ExperimentConfig config = persuasion::parse_config(document);

        // Flags override config fields.
        if (!out_path.empty()) config.out = out_path;
        if (seed) config.seed = *seed;
        if (trials) config.trials = *trials;
        if (resolution) config.resolution = *resolution;
        if (gamma0) config.gamma0 = *gamma0;

        if (attainable->parsed()) return cmd_attainable(config, format);
        if (values->parsed()) return run_values(config);
        if (figure->parsed()) return run_figure(config);
        if (simulate_cmd->parsed()) return run_simulate(config);
        if (verify->parsed()) return run_verify(config);
        return 1;
    } catch (const persuasion::NotAttainable& error) {
        persuasion::json failure{{"failures", {std::string("NotAttainable: ") + error.what()}}};
        std::cout << failure.dump(2) << "\n";
        return 2;
    } catch (const std::exception& error) {
        persuasion::json failure{{"failures", {error.what()}}};
        std::cout << failure.dump(2) << "\n";
        return 2;
    }
}
