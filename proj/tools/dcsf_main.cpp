// dcsf: scenario generation, solving, comparison and export.
//
// Exit codes: 0 ok, 1 input error, 2 runtime error.

#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "dcsf/cli.hpp"
#include "dcsf/io.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kRuntimeError = 2;

void add_generate_flags(CLI::App* app, dcsf::GenerateOptions& g) {
  app->add_option("--users", g.users, "Number of ground users")->check(CLI::PositiveNumber);
  app->add_option("--uavs", g.uavs, "Number of UAVs")->check(CLI::PositiveNumber);
  app->add_option("--area", g.area, "Side of the square area in meters")->check(CLI::PositiveNumber);
  app->add_option("--z-min", g.z_min, "Lowest UAV altitude in meters");
  app->add_option("--z-max", g.z_max, "Highest UAV altitude in meters");
  app->add_option("--bs-x", g.bs.x, "Base station x in meters");
  app->add_option("--bs-y", g.bs.y, "Base station y in meters");
  app->add_option("--bs-z", g.bs.z, "Base station z in meters");
  app->add_option("--user-power", g.user_tx_power, "User transmit power in W");
  app->add_option("--uav-power", g.uav_tx_power, "UAV transmit power in W");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-UAV data collection and semantic forwarding optimizer"};
  app.require_subcommand(1);

  dcsf::GenerateOptions gen;
  std::string gen_out = "scenario.json";
  auto* generate = app.add_subcommand("generate", "Write a random scenario file");
  add_generate_flags(generate, gen);
  generate->add_option("--seed", gen.seed, "Scenario seed");
  generate->add_option("--out,-o", gen_out, "Output file");

  dcsf::SolveOptions solve;
  std::string scenario_path, params_path, config_path, out_dir = "run";
  std::string mode = "llm-aoa", advisor, baseline, c7;
  std::optional<std::uint64_t> scenario_seed;
  std::size_t population = 0, ao_iterations = 0, local_generations = 0;
  double p_c = 0.0, p_m = 0.0;
  long long timeout_ms = 0;
  auto* solver = app.add_subcommand("solve", "Run an optimizer and write a run directory");
  solver->add_option("--scenario", scenario_path, "Scenario JSON; generated when omitted");
  add_generate_flags(solver, solve.generate);
  solver->add_option("--scenario-seed", scenario_seed, "Seed for a generated scenario (default: --seed)");
  solver->add_option("--params", params_path, "SystemParams JSON");
  solver->add_option("--config", config_path, "Solver config JSON; flags override it");
  solver->add_option("--mode", mode, "llm-aoa, aoa or monolithic-nsga2")
      ->check(CLI::IsMember({"llm-aoa", "aoa", "monolithic-nsga2"}));
  solver->add_option("--advisor", advisor, "llm, fallback or static")
      ->check(CLI::IsMember({"llm", "fallback", "static"}));
  solver->add_option("--seed", solve.config.seed, "Solver seed");
  solver->add_option("--population,-M", population, "Population size (even, >= 4)");
  solver->add_option("--ao-iterations", ao_iterations, "Alternating-optimization iterations");
  solver->add_option("--local-generations", local_generations, "NSGA-II generations per iteration");
  solver->add_option("--pc", p_c, "Initial crossover probability");
  solver->add_option("--pm", p_m, "Initial mutation probability");
  solver->add_option("--gca-baseline", baseline, "stale or refreshed")
      ->check(CLI::IsMember({"stale", "refreshed"}));
  solver->add_option("--c7", c7, "always-optimize or literal-compare")
      ->check(CLI::IsMember({"always-optimize", "literal-compare"}));
  solver->add_option("--llm-model", solve.llm.model, "Chat model name");
  solver->add_option("--llm-timeout-ms", timeout_ms, "Total advisor budget per call");
  solver->add_option("--llm-retries", solve.llm.retries, "Retries per advisor call");
  solver->add_option("--out,-o", out_dir, "Run directory");

  std::vector<std::string> runs, pair_with;
  std::string compare_out;
  auto* compare = app.add_subcommand("compare", "Tabulate run directories");
  compare->add_option("runs", runs, "Run directories")->required();
  compare->add_option("--pair-with", pair_with, "Baseline run directory for each run");
  compare->add_option("--out,-o", compare_out, "Directory for compare.csv and ratios.csv");

  std::string export_run, export_out;
  auto* exporter = app.add_subcommand("export-deployment", "Write users.csv and uavs.csv");
  exporter->add_option("run", export_run, "Run directory")->required();
  exporter->add_option("--out,-o", export_out, "Output directory (default: the run directory)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (generate->parsed()) {
      dcsf::cmd_generate(gen, gen_out, std::cout);
    } else if (solver->parsed()) {
      if (!scenario_path.empty()) solve.scenario = scenario_path;
      if (!params_path.empty()) solve.params = params_path;
      solve.generate.seed = scenario_seed.value_or(solve.config.seed);
      if (!config_path.empty()) {
        const std::uint64_t seed = solve.config.seed;
        solve.config = dcsf::config_from_json(dcsf::read_json_file(config_path));
        if (solver->count("--seed") > 0) solve.config.seed = seed;
      }
      solve.mode = *dcsf::parse_solver_mode(mode);
      if (!advisor.empty()) solve.config.advisor_mode = *dcsf::parse_advisor_mode(advisor);
      if (!baseline.empty()) solve.config.gca_baseline = *dcsf::parse_gca_baseline(baseline);
      if (population > 0) solve.config.population = population;
      if (ao_iterations > 0) solve.config.ao_iterations = ao_iterations;
      if (local_generations > 0) solve.config.local_generations = local_generations;
      if (solver->count("--pc") > 0) solve.config.crossover_prob = p_c;
      if (solver->count("--pm") > 0) solve.config.mutation_prob = p_m;
      if (timeout_ms > 0) solve.llm.timeout = std::chrono::milliseconds(timeout_ms);
      if (!c7.empty()) solve.c7_mode = *dcsf::parse_c7_mode(c7);
      solve.out = out_dir;
      dcsf::cmd_solve(solve, std::cout);
    } else if (compare->parsed()) {
      std::vector<std::filesystem::path> a(runs.begin(), runs.end());
      std::vector<std::filesystem::path> b(pair_with.begin(), pair_with.end());
      std::optional<std::filesystem::path> out;
      if (!compare_out.empty()) out = compare_out;
      dcsf::cmd_compare(a, b, out, std::cout);
    } else if (exporter->parsed()) {
      dcsf::cmd_export_deployment(export_run, export_out.empty() ? export_run : export_out,
                                  std::cout);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return 0;
}
