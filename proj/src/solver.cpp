#include "dcsf/solver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

#include "dcsf/problem.hpp"
#include "dcsf/semantic.hpp"
#include "dcsf/similarity.hpp"

namespace dcsf {

std::string_view to_string(SolverMode mode) {
  switch (mode) {
    case SolverMode::LlmAoa: return "llm-aoa";
    case SolverMode::Aoa: return "aoa";
    case SolverMode::MonolithicNsga2: return "monolithic-nsga2";
  }
  return "unknown";
}

std::optional<SolverMode> parse_solver_mode(std::string_view text) {
  if (text == "llm-aoa") return SolverMode::LlmAoa;
  if (text == "aoa") return SolverMode::Aoa;
  if (text == "monolithic-nsga2") return SolverMode::MonolithicNsga2;
  return std::nullopt;
}

std::string_view to_string(GcaBaseline baseline) {
  return baseline == GcaBaseline::Stale ? "stale" : "refreshed";
}

std::optional<GcaBaseline> parse_gca_baseline(std::string_view text) {
  if (text == "stale") return GcaBaseline::Stale;
  if (text == "refreshed") return GcaBaseline::Refreshed;
  return std::nullopt;
}

void SolverConfig::validate() const {
  if (population < 4 || population % 2 != 0) {
    throw std::invalid_argument("population must be even and at least 4");
  }
  if (ao_iterations < 1 || local_generations < 1) {
    throw std::invalid_argument("iteration counts must be at least 1");
  }
  if (!(crossover_prob > 0.0 && crossover_prob <= 1.0)) {
    throw std::invalid_argument("crossover probability must lie in (0, 1]");
  }
  if (!(mutation_prob > 0.0 && mutation_prob <= 1.0)) {
    throw std::invalid_argument("mutation probability must lie in (0, 1]");
  }
  if (!(sbx_eta > 0.0) || !(poly_eta > 0.0)) {
    throw std::invalid_argument("distribution indices must be positive");
  }
}

Population initialize_population(const Scenario& scenario, const SystemParams& params,
                                 const SolverConfig& config, Rng& rng) {
  const std::size_t n = scenario.n_uavs();
  const Bounds& b = scenario.bounds;
  std::uniform_int_distribution<int> label(1, static_cast<int>(n));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> symbols(params.k_min, params.k_max);

  Population pop;
  pop.reserve(config.population);
  for (std::size_t m = 0; m < config.population; ++m) {
    Individual ind;
    std::vector<int> labels(n);
    for (auto& l : labels) l = label(rng);
    ind.assignment = ClusterAssignment(std::move(labels));
    ind.assignment.canonicalize();
    ind.positions.resize(n);
    for (auto& p : ind.positions) {
      p.x = b.x.min + unit(rng) * b.x.width();
      p.y = b.y.min + unit(rng) * b.y.width();
      p.z = b.z.min + unit(rng) * b.z.width();
    }
    ind.weights.resize(n);
    for (auto& w : ind.weights) w = params.w_min + unit(rng) * (params.w_max - params.w_min);
    ind.symbols.resize(ind.assignment.n_clusters());
    for (auto& k : ind.symbols) k = symbols(rng);
    evaluate(ind, scenario, params);
    pop.push_back(std::move(ind));
  }
  return pop;
}

namespace {

Individual merged(const Individual& ind, int keep, int absorbed) {
  Individual out = ind;
  out.assignment.merge(keep, absorbed);
  out.symbols.erase(out.symbols.begin() + (absorbed - 1));
  out.evaluated = false;
  return out;
}

}  // namespace

std::vector<MergeRecord> gca_individual(Individual& ind, const Scenario& scenario,
                                        const SystemParams& params, GcaBaseline baseline) {
  std::vector<MergeRecord> records;
  double current = sum_semantic_rate(scenario, ind, params);
  const double stale = ind.evaluated ? ind.objectives.f2 : current;

  while (ind.assignment.n_clusters() > 1) {
    const double reference = baseline == GcaBaseline::Stale ? stale : current;
    const int n = static_cast<int>(ind.assignment.n_clusters());
    double best_gain = 0.0;
    double best_f2 = 0.0;
    std::optional<Individual> best;
    // Merging a into b and b into a give the same partition and k, so each
    // unordered pair is scored once with the lower label surviving.
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        Individual candidate = merged(ind, i, j);
        const double f2 = sum_semantic_rate(scenario, candidate, params);
        const double gain = f2 - reference;
        if (gain > best_gain) {
          best_gain = gain;
          best_f2 = f2;
          best = std::move(candidate);
        }
      }
    }
    if (!best) break;
    records.push_back({ind.assignment, best->assignment, reference, current, best_f2});
    ind.assignment = best->assignment;
    ind.symbols = best->symbols;
    current = best_f2;
  }
  evaluate(ind, scenario, params);
  return records;
}

void gca_step(Population& population, const Scenario& scenario, const SystemParams& params,
              GcaBaseline baseline) {
  for (auto& ind : population) gca_individual(ind, scenario, params, baseline);
}

void gso_individual(Individual& ind, const Scenario& scenario, const SystemParams& params) {
  const std::size_t n = ind.assignment.n_clusters();
  const auto links = cluster_links(scenario, ind, params);
  for (std::size_t c = 0; c < n; ++c) {
    if (params.c7_mode == C7Mode::LiteralCompare) {
      const double f1 = ind.evaluated ? ind.objectives.f1 : 0.0;
      if (!(f1 > sum_semantic_rate(scenario, ind, params))) continue;
    }
    int best_k = ind.symbols[c];
    double best_f2 = -1.0;
    int best_xi_k = params.k_min;
    double best_xi = -1.0;
    bool any_feasible = false;
    for (int k = params.k_min; k <= params.k_max; ++k) {
      const double xi = semantic_similarity(params.similarity, k, links[c].snr);
      if (xi > best_xi) {
        best_xi = xi;
        best_xi_k = k;
      }
      if (xi < params.xi_threshold) continue;
      ind.symbols[c] = k;
      const double f2 = sum_semantic_rate(scenario, ind, params);
      if (!any_feasible || f2 > best_f2) {
        best_f2 = f2;
        best_k = k;
      }
      any_feasible = true;
    }
    ind.symbols[c] = any_feasible ? best_k : best_xi_k;
  }
  evaluate(ind, scenario, params);
}

void gso_step(Population& population, const Scenario& scenario, const SystemParams& params) {
  for (auto& ind : population) gso_individual(ind, scenario, params);
}

void sbx_crossover(std::vector<double>& a, std::vector<double>& b, const GeneBounds& bounds,
                   double eta, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (unit(rng) > 0.5) continue;
    const double lo = bounds.lower[i];
    const double hi = bounds.upper[i];
    if (std::abs(a[i] - b[i]) <= 1e-14 || !(hi > lo)) continue;
    const double y1 = std::min(a[i], b[i]);
    const double y2 = std::max(a[i], b[i]);
    const double u = unit(rng);
    auto spread = [&](double beta) {
      const double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
      if (u <= 1.0 / alpha) return std::pow(u * alpha, 1.0 / (eta + 1.0));
      return std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
    };
    const double bq1 = spread(1.0 + 2.0 * (y1 - lo) / (y2 - y1));
    const double bq2 = spread(1.0 + 2.0 * (hi - y2) / (y2 - y1));
    double c1 = std::clamp(0.5 * ((y1 + y2) - bq1 * (y2 - y1)), lo, hi);
    double c2 = std::clamp(0.5 * ((y1 + y2) + bq2 * (y2 - y1)), lo, hi);
    if (unit(rng) < 0.5) std::swap(c1, c2);
    a[i] = c1;
    b[i] = c2;
  }
}

void polynomial_mutation(std::vector<double>& x, const GeneBounds& bounds, double eta, Rng& rng) {
  if (x.empty()) return;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double rate = 1.0 / static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (unit(rng) >= rate) continue;
    const double lo = bounds.lower[i];
    const double hi = bounds.upper[i];
    if (!(hi > lo)) continue;
    const double d1 = (x[i] - lo) / (hi - lo);
    const double d2 = (hi - x[i]) / (hi - lo);
    const double u = unit(rng);
    const double power = 1.0 / (eta + 1.0);
    double dq = 0.0;
    if (u < 0.5) {
      const double v = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta + 1.0);
      dq = std::pow(v, power) - 1.0;
    } else {
      const double v = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, eta + 1.0);
      dq = 1.0 - std::pow(v, power);
    }
    x[i] = std::clamp(x[i] + dq * (hi - lo), lo, hi);
  }
}

std::size_t crossover_pairs(double p_c, std::size_t population) {
  return static_cast<std::size_t>(std::lround(p_c * static_cast<double>(population))) / 2;
}

std::size_t mutation_count(double p_m, std::size_t population) {
  return static_cast<std::size_t>(std::lround(p_m * static_cast<double>(population)));
}

namespace {

// Real-coded view of an individual: Q (x, y, z per UAV), then w, then
// optionally c and a k buffer padded to N_V.
struct Codec {
  std::size_t n = 0;
  bool structural = false;
  GeneBounds bounds;

  Codec(const Scenario& scenario, const SystemParams& params, bool with_structure)
      : n(scenario.n_uavs()), structural(with_structure) {
    const Bounds& b = scenario.bounds;
    for (std::size_t v = 0; v < n; ++v) {
      for (const Interval* axis : {&b.x, &b.y, &b.z}) {
        bounds.lower.push_back(axis->min);
        bounds.upper.push_back(axis->max);
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      bounds.lower.push_back(params.w_min);
      bounds.upper.push_back(params.w_max);
    }
    if (structural) {
      for (std::size_t v = 0; v < n; ++v) {
        bounds.lower.push_back(1.0);
        bounds.upper.push_back(static_cast<double>(n));
      }
      for (std::size_t v = 0; v < n; ++v) {
        bounds.lower.push_back(params.k_min);
        bounds.upper.push_back(params.k_max);
      }
    }
  }

  std::vector<double> encode(const Individual& ind, int k_fill) const {
    std::vector<double> g;
    g.reserve(bounds.lower.size());
    for (const auto& p : ind.positions) {
      g.push_back(p.x);
      g.push_back(p.y);
      g.push_back(p.z);
    }
    for (double w : ind.weights) g.push_back(w);
    if (structural) {
      for (int l : ind.assignment.labels()) g.push_back(l);
      for (std::size_t c = 0; c < n; ++c) {
        g.push_back(c < ind.symbols.size() ? ind.symbols[c] : k_fill);
      }
    }
    return g;
  }

  void decode(const std::vector<double>& g, Individual& ind, const SystemParams& params) const {
    for (std::size_t v = 0; v < n; ++v) {
      ind.positions[v] = {g[3 * v], g[3 * v + 1], g[3 * v + 2]};
      ind.weights[v] = g[3 * n + v];
    }
    if (!structural) return;
    std::vector<int> labels(n);
    for (std::size_t v = 0; v < n; ++v) {
      labels[v] = std::clamp(static_cast<int>(std::lround(g[4 * n + v])), 1, static_cast<int>(n));
    }
    ind.assignment = ClusterAssignment(std::move(labels));
    ind.assignment.canonicalize();
    std::vector<int> k(n);
    for (std::size_t c = 0; c < n; ++c) {
      k[c] = std::clamp(static_cast<int>(std::lround(g[5 * n + c])), params.k_min, params.k_max);
    }
    k.resize(ind.assignment.n_clusters());
    ind.symbols = std::move(k);
  }
};

std::size_t tournament(const RankInfo& info, std::size_t size, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, size - 1);
  const std::size_t a = pick(rng);
  const std::size_t b = pick(rng);
  if (info.rank[b] < info.rank[a]) return b;
  if (info.rank[b] == info.rank[a] && info.crowding[b] > info.crowding[a]) return b;
  return a;
}

void generation(Population& population, const Scenario& scenario, const SystemParams& params,
                double p_c, double p_m, const SolverConfig& config, Rng& rng, bool structural) {
  const std::size_t m = population.size();
  if (m == 0) return;
  const Codec codec(scenario, params, structural);
  const RankInfo info = rank_pool(population);

  Population pool = population;
  const std::size_t pairs = crossover_pairs(p_c, m);
  for (std::size_t i = 0; i < pairs; ++i) {
    const std::size_t pa = tournament(info, m, rng);
    const std::size_t pb = tournament(info, m, rng);
    auto ga = codec.encode(population[pa], params.k_min);
    auto gb = codec.encode(population[pb], params.k_min);
    sbx_crossover(ga, gb, codec.bounds, config.sbx_eta, rng);
    Individual ca = population[pa];
    Individual cb = population[pb];
    codec.decode(ga, ca, params);
    codec.decode(gb, cb, params);
    pool.push_back(std::move(ca));
    pool.push_back(std::move(cb));
  }
  const std::size_t mutants = mutation_count(p_m, m);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  for (std::size_t i = 0; i < mutants; ++i) {
    const std::size_t p = pick(rng);
    auto g = codec.encode(population[p], params.k_min);
    polynomial_mutation(g, codec.bounds, config.poly_eta, rng);
    Individual child = population[p];
    codec.decode(g, child, params);
    pool.push_back(std::move(child));
  }
  for (std::size_t i = m; i < pool.size(); ++i) evaluate(pool[i], scenario, params);

  auto keep = select_best(pool, m);
  std::sort(keep.begin(), keep.end());
  Population next;
  next.reserve(m);
  for (std::size_t i : keep) next.push_back(std::move(pool[i]));
  population = std::move(next);
}

}  // namespace

void nsga2_generation(Population& population, const Scenario& scenario,
                      const SystemParams& params, double p_c, double p_m,
                      const SolverConfig& config, Rng& rng) {
  generation(population, scenario, params, p_c, p_m, config, rng, false);
}

void monolithic_generation(Population& population, const Scenario& scenario,
                           const SystemParams& params, double p_c, double p_m,
                           const SolverConfig& config, Rng& rng) {
  generation(population, scenario, params, p_c, p_m, config, rng, true);
}

void assess(Population& population, std::size_t keep) {
  const auto order = select_best(population, keep);
  Population next;
  next.reserve(order.size());
  for (std::size_t i : order) next.push_back(std::move(population[i]));
  population = std::move(next);
}

namespace {

std::vector<ObjectiveTriple> metric_front(const Population& population) {
  std::vector<ObjectiveTriple> out;
  auto idx = feasible_front(population);
  if (idx.empty() && !population.empty()) idx = nondominated_sort(population).front();
  for (std::size_t i : idx) out.push_back(population[i].objectives);
  return out;
}

void check_finite(const Population& population, std::size_t iteration) {
  for (std::size_t i = 0; i < population.size(); ++i) {
    const auto& o = population[i].objectives;
    if (!o.finite() || !std::isfinite(population[i].violation)) {
      throw std::runtime_error("non-finite objective at iteration " + std::to_string(iteration) +
                               ", individual " + std::to_string(i) + ": f1=" +
                               std::to_string(o.f1) + " f2=" + std::to_string(o.f2) +
                               " f3=" + std::to_string(o.f3));
    }
  }
}

HistoryRecord record(const Population& population, const ObjectiveFrame& frame,
                     std::size_t iteration, double p_c, double p_m) {
  const auto front = metric_front(population);
  HistoryRecord r;
  r.iteration = iteration;
  r.sp = spacing_metric(front, frame);
  r.m3 = max_spread_metric(front, frame);
  r.hypervolume = hypervolume(front, frame);
  r.p_c = p_c;
  r.p_m = p_m;
  return r;
}

}  // namespace

RunResult run(SolverMode mode, const Scenario& scenario, const SystemParams& params,
              const SolverConfig& config, Advisor& advisor) {
  scenario.check();
  params.validate();
  config.validate();

  Rng rng(config.seed);
  RunResult result;
  Population& pop = result.population;
  pop = initialize_population(scenario, params, config, rng);
  check_finite(pop, 0);
  {
    std::vector<ObjectiveTriple> initial;
    for (const auto& ind : pop) initial.push_back(ind.objectives);
    result.frame = ObjectiveFrame::from_points(initial);
  }

  double p_c = config.crossover_prob;
  double p_m = config.mutation_prob;

  if (mode == SolverMode::MonolithicNsga2) {
    for (std::size_t t = 1; t <= config.ao_iterations; ++t) {
      for (std::size_t g = 0; g < config.local_generations; ++g) {
        monolithic_generation(pop, scenario, params, p_c, p_m, config, rng);
        result.parameter_trajectory.push_back(clamp_update(p_c, p_m, UpdateSource::Static));
      }
      assess(pop, config.population);
      check_finite(pop, t);
      result.history.push_back(record(pop, result.frame, t, p_c, p_m));
    }
    return result;
  }

  Advisor static_advisor(AdvisorMode::Static);
  Advisor& active = mode == SolverMode::Aoa ? static_advisor : advisor;
  std::deque<MetricSample> window;
  std::size_t generation_index = 0;

  for (std::size_t t = 1; t <= config.ao_iterations; ++t) {
    gca_step(pop, scenario, params, config.gca_baseline);
    for (std::size_t g = 0; g < config.local_generations; ++g) {
      nsga2_generation(pop, scenario, params, p_c, p_m, config, rng);
      ++generation_index;

      const auto front = metric_front(pop);
      AdvisorInput input;
      input.generation = generation_index;
      input.p_c = p_c;
      input.p_m = p_m;
      input.sp = spacing_metric(front, result.frame);
      input.m3 = max_spread_metric(front, result.frame);
      if (!front.empty()) {
        input.front_min = {front[0].f1, front[0].f2, front[0].f3};
        input.front_max = input.front_min;
        for (const auto& o : front) {
          const double v[3] = {o.f1, o.f2, o.f3};
          for (int k = 0; k < 3; ++k) {
            input.front_min[k] = std::min(input.front_min[k], v[k]);
            input.front_max[k] = std::max(input.front_max[k], v[k]);
          }
        }
      }
      input.window.assign(window.begin(), window.end());

      const ParamUpdate update = active.advise(input);
      result.parameter_trajectory.push_back(update);
      p_c = update.p_c;
      p_m = update.p_m;
      window.push_back({input.sp, input.m3});
      if (window.size() > kAdvisorWindow) window.pop_front();
    }
    gso_step(pop, scenario, params);
    assess(pop, config.population);
    check_finite(pop, t);
    result.history.push_back(record(pop, result.frame, t, p_c, p_m));
  }
  return result;
}

}  // namespace dcsf
