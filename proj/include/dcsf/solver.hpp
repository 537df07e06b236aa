#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "dcsf/advisor.hpp"
#include "dcsf/individual.hpp"
#include "dcsf/params.hpp"
#include "dcsf/pareto.hpp"
#include "dcsf/scenario.hpp"

namespace dcsf {

using Rng = std::mt19937_64;
using Population = std::vector<Individual>;

enum class SolverMode { LlmAoa, Aoa, MonolithicNsga2 };

// Baseline used by the clustering merge test. Stale compares every
// candidate against the f2 cached before the step; Refreshed compares
// against the f2 of the current assignment after each applied merge.
enum class GcaBaseline { Stale, Refreshed };

std::string_view to_string(SolverMode mode);
std::optional<SolverMode> parse_solver_mode(std::string_view text);
std::string_view to_string(GcaBaseline baseline);
std::optional<GcaBaseline> parse_gca_baseline(std::string_view text);

struct SolverConfig {
  std::size_t population = 30;      // M
  std::size_t ao_iterations = 50;   // outer alternating-optimization loops
  std::size_t local_generations = 10;
  double crossover_prob = 0.8;
  double mutation_prob = 0.4;
  double sbx_eta = 15.0;
  double poly_eta = 20.0;
  AdvisorMode advisor_mode = AdvisorMode::Fallback;
  std::uint64_t seed = 1;
  GcaBaseline gca_baseline = GcaBaseline::Stale;

  void validate() const;
};

// Random c, uniform Q in bounds, uniform w, random k per cluster; every
// individual canonicalized and evaluated.
Population initialize_population(const Scenario& scenario, const SystemParams& params,
                                 const SolverConfig& config, Rng& rng);

struct MergeRecord {
  ClusterAssignment before;
  ClusterAssignment after;
  double baseline = 0.0;  // f2 the candidate was compared against
  double f2_before = 0.0;
  double f2_after = 0.0;
};

// Greedy best-gain merging of one individual. Returns the applied merges.
std::vector<MergeRecord> gca_individual(Individual& ind, const Scenario& scenario,
                                        const SystemParams& params, GcaBaseline baseline);
void gca_step(Population& population, const Scenario& scenario, const SystemParams& params,
              GcaBaseline baseline);

// Exhaustive per-cluster search of k in [k_min, k_max] maximizing f2.
void gso_individual(Individual& ind, const Scenario& scenario, const SystemParams& params);
void gso_step(Population& population, const Scenario& scenario, const SystemParams& params);

// Simulated binary crossover and polynomial mutation on a real vector with
// per-gene bounds. Results are clamped to the bounds.
struct GeneBounds {
  std::vector<double> lower;
  std::vector<double> upper;
};
void sbx_crossover(std::vector<double>& a, std::vector<double>& b, const GeneBounds& bounds,
                   double eta, Rng& rng);
void polynomial_mutation(std::vector<double>& x, const GeneBounds& bounds, double eta, Rng& rng);

// Offspring counts for one generation.
std::size_t crossover_pairs(double p_c, std::size_t population);
std::size_t mutation_count(double p_m, std::size_t population);

// One generation of NSGA-II over (Q, w) with c and k held fixed per
// individual. The population is replaced by the best M of parents plus
// offspring.
void nsga2_generation(Population& population, const Scenario& scenario,
                      const SystemParams& params, double p_c, double p_m,
                      const SolverConfig& config, Rng& rng);

// Same, but c (rounded reals) and k (resized by truncation / k_min padding)
// also take part in variation.
void monolithic_generation(Population& population, const Scenario& scenario,
                           const SystemParams& params, double p_c, double p_m,
                           const SolverConfig& config, Rng& rng);

// Sort by rank and crowding, truncate to `keep`.
void assess(Population& population, std::size_t keep);

struct HistoryRecord {
  std::size_t iteration = 0;
  double sp = 0.0;
  double m3 = 0.0;
  double hypervolume = 0.0;
  double p_c = 0.0;
  double p_m = 0.0;
};

struct RunResult {
  Population population;
  std::vector<HistoryRecord> history;
  std::vector<ParamUpdate> parameter_trajectory;  // one per generation
  ObjectiveFrame frame;  // fixed normalization used for SP, M3* and HV
};

// Runs the selected pipeline. Aoa forces a static advisor; the monolithic
// baseline uses static parameters as well. Throws std::runtime_error if an
// objective becomes non-finite.
RunResult run(SolverMode mode, const Scenario& scenario, const SystemParams& params,
              const SolverConfig& config, Advisor& advisor);

}  // namespace dcsf
