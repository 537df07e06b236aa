#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "dcsf/individual.hpp"
#include "dcsf/params.hpp"
#include "dcsf/scenario.hpp"
#include "dcsf/similarity.hpp"
#include "dcsf/solver.hpp"

namespace dcsf {

using Json = nlohmann::json;

// Every reader throws std::invalid_argument on malformed input, naming the
// offending key. Missing keys keep their defaults; unknown keys are rejected.

Json to_json(const Position3& p);
Position3 position_from_json(const Json& j);

Json to_json(const Bounds& b);
Bounds bounds_from_json(const Json& j);

Json to_json(const RotorModel& rotor);
RotorModel rotor_from_json(const Json& j);

// Array of {k, a, b, c}.
Json to_json(const SimilarityModel& model);
SimilarityModel similarity_from_json(const Json& j);

Json to_json(const SystemParams& params);
SystemParams params_from_json(const Json& j);

// {users: [[x,y,z],...], uavs_initial: [[x,y,z],...], bs: [x,y,z],
//  bounds: {x: [min,max], y: [...], z: [...]}, seed, user_tx_power, uav_tx_power}
Json to_json(const Scenario& scenario);
Scenario scenario_from_json(const Json& j);

// {c, Q, w, k, objectives: {f1, f2, f3}, violation}
Json to_json(const Individual& ind);
Individual individual_from_json(const Json& j);

Json to_json(const ObjectiveTriple& t);

Json to_json(const SolverConfig& config);
SolverConfig config_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
// Pretty-printed with a trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

SimilarityModel load_similarity_table(const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);
SystemParams load_params(const std::filesystem::path& path);

std::string_view to_string(C7Mode mode);
std::optional<C7Mode> parse_c7_mode(std::string_view text);

}  // namespace dcsf
