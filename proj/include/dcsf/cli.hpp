#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <ostream>
#include <string>
#include <vector>

#include "dcsf/advisor.hpp"
#include "dcsf/individual.hpp"
#include "dcsf/params.hpp"
#include "dcsf/scenario.hpp"
#include "dcsf/solver.hpp"

namespace dcsf {

struct GenerateOptions {
  std::size_t users = 500;
  std::size_t uavs = 8;
  double area = 1000.0;  // side of the square monitored area, m
  double z_min = 60.0;
  double z_max = 120.0;
  Position3 bs{5000.0, 5000.0, 0.0};
  std::uint64_t seed = 1;
  double user_tx_power = 0.1;
  double uav_tx_power = 0.1;
};

Scenario build_scenario(const GenerateOptions& options);

// Writes the scenario JSON to `out` and a one-line summary to `log`.
Scenario cmd_generate(const GenerateOptions& options, const std::filesystem::path& out,
                      std::ostream& log);

struct SolveOptions {
  std::optional<std::filesystem::path> scenario;  // generated from `generate` when absent
  GenerateOptions generate;
  std::optional<std::filesystem::path> params;
  std::optional<C7Mode> c7_mode;  // overrides the params file
  SolverMode mode = SolverMode::LlmAoa;
  SolverConfig config;
  LlmSettings llm;
  std::filesystem::path out = "run";
};

struct RunReport {
  std::string run_id;
  SolverMode mode = SolverMode::LlmAoa;
  AdvisorMode advisor = AdvisorMode::Fallback;
  std::uint64_t seed = 0;
  double wall_time_s = 0.0;
  std::size_t front_size = 0;
  bool front_feasible = false;
  std::optional<ObjectiveTriple> knee;
  double hypervolume = 0.0;
  ObjectiveFrame frame;  // normalization behind `hypervolume`
  double sp = 0.0;
  double m3 = 0.0;
  std::size_t llm_failures = 0;
  std::map<std::string, std::string> artifacts;
};

// Runs the solver and writes config.json, scenario.json, history.csv,
// trajectory.csv, pareto.json, deployment.json and report.json into
// options.out.
RunReport cmd_solve(const SolveOptions& options, std::ostream& log);

// Front stored in a run directory's pareto.json.
std::vector<Individual> load_front(const std::filesystem::path& run_dir);

// Hypervolumes of two fronts in the frame spanned by both of them.
std::pair<double, double> joint_hypervolume(std::span<const ObjectiveTriple> a,
                                            std::span<const ObjectiveTriple> b);

struct CompareRow {
  std::string run;
  std::string mode;
  std::uint64_t seed = 0;
  std::size_t front_size = 0;
  ObjectiveTriple knee;
  double hypervolume = 0.0;  // in the frame shared by every compared run
  double sp = 0.0;
  double m3 = 0.0;
};

struct CompareRatio {
  std::string a;
  std::string b;
  double hv_a = 0.0;
  double hv_b = 0.0;
  double ratio = 0.0;  // hv_a / hv_b
};

struct CompareResult {
  std::vector<CompareRow> rows;
  std::vector<CompareRatio> ratios;
  std::optional<double> median_ratio;  // paired mode only
  std::size_t wins = 0;                // paired mode: pairs with ratio >= 1
};

// Without `pair_with`, every ordered pair of runs gets a ratio in the shared
// frame. With it, runs[i] is paired with pair_with[i] and each pair uses its
// own joint frame. Writes compare.csv and ratios.csv into out_dir if given.
CompareResult cmd_compare(const std::vector<std::filesystem::path>& runs,
                          const std::vector<std::filesystem::path>& pair_with,
                          const std::optional<std::filesystem::path>& out_dir, std::ostream& log);

// users.csv and uavs.csv for the knee deployment of a run.
void cmd_export_deployment(const std::filesystem::path& run_dir,
                           const std::filesystem::path& out_dir, std::ostream& log);

}  // namespace dcsf
