#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "persuasion/attainable.hpp"
#include "persuasion/crowdfund.hpp"
#include "persuasion/cs_partition.hpp"
#include "persuasion/envelopes.hpp"
#include "persuasion/simulate.hpp"

namespace persuasion {

using json = nlohmann::json;

/// Default seed used by the CLI when none is given; documented in README.md
/// so published commands reproduce byte-identical outputs.
inline constexpr uint64_t kDefaultSeed = 12345;

json belief_to_json(const FiniteBelief& belief);
FiniteBelief belief_from_json(const json& array, const StateSpace& space);

json density_to_json(const PiecewiseDensity& density);
PiecewiseDensity density_from_json(const json& object);

json interval_to_json(const BinaryInterval& interval);
json polytope_to_json(const AttainablePolytope& polytope);
std::string polytope_to_csv(const AttainablePolytope& polytope);

json report_to_json(const SimReport& report);
json check_to_json(const EquilibriumCheck& check);
json values_to_json(const EquilibriumValueReport& report);

/// CSV bundle with columns p, v0, qconv, conv, one attain_qconv column per
/// gamma0 in `gammas`, and attain_conv at the first gamma0.
std::string curve_bundle_csv(const Game& game, int resolution,
                             const std::vector<double>& gammas);

/// Parsed experiment description. Flags override config fields.
struct ExperimentConfig {
    std::string command;
    json game;  ///< object with a "game" discriminator, possibly empty
    std::string out;
    uint64_t seed = kDefaultSeed;
    int trials = 100000;
    int resolution = kDefaultCurveResolution;
    std::optional<double> gamma0;
    std::optional<std::vector<double>> prior;
    std::optional<std::vector<double>> target;
    bool uniform_prior = false;
    int theta_grid = 100;
    std::optional<int> n;
    std::optional<int> n0;
};

ExperimentConfig parse_config(const json& document);

ElectionParams election_params_from_json(const json& game);
BookieParams bookie_params_from_json(const json& game);
CrowdfundParams crowdfund_params_from_json(const json& game);
QuadraticCSParams cs_params_from_json(const json& game);

}  // namespace persuasion
