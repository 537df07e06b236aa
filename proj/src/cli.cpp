#include "dcsf/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "dcsf/io.hpp"
#include "dcsf/pareto.hpp"

namespace dcsf {

namespace fs = std::filesystem;

namespace {

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::vector<ObjectiveTriple> objectives_of(std::span<const Individual> inds) {
  std::vector<ObjectiveTriple> out;
  out.reserve(inds.size());
  for (const auto& ind : inds) out.push_back(ind.objectives);
  return out;
}

Json frame_json(const ObjectiveFrame& frame) {
  return {{"ideal", frame.ideal},
          {"nadir", frame.nadir},
          {"reference", kHypervolumeReference},
          {"space", "(-f1, -f2, f3) normalized so ideal = 0, nadir = 1"}};
}

}  // namespace

Scenario build_scenario(const GenerateOptions& o) {
  if (o.users < 1 || o.uavs < 1) throw std::invalid_argument("need at least one user and one UAV");
  if (!(o.area > 0.0)) throw std::invalid_argument("area side must be positive");
  return generate_scenario(o.users, o.uavs, square_area(o.area, o.z_min, o.z_max), o.bs, o.seed,
                           o.user_tx_power, o.uav_tx_power);
}

Scenario cmd_generate(const GenerateOptions& options, const fs::path& out, std::ostream& log) {
  Scenario s = build_scenario(options);
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  write_json_file(out, to_json(s));
  log << "wrote " << out.string() << ": " << s.n_users() << " users, " << s.n_uavs()
      << " UAVs, area " << options.area << " m, altitude " << options.z_min << ".."
      << options.z_max << " m, seed " << s.seed << "\n";
  return s;
}

RunReport cmd_solve(const SolveOptions& options, std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  const Scenario scenario =
      options.scenario ? load_scenario(*options.scenario) : build_scenario(options.generate);
  SystemParams params = options.params ? load_params(*options.params) : SystemParams{};
  if (options.c7_mode) params.c7_mode = *options.c7_mode;
  params.validate();
  const SolverConfig& config = options.config;
  config.validate();

  AdvisorMode advisor_mode = config.advisor_mode;
  std::unique_ptr<LlmTransport> transport;
  if (options.mode != SolverMode::LlmAoa) {
    advisor_mode = AdvisorMode::Static;
  } else if (advisor_mode == AdvisorMode::Llm) {
    transport = transport_from_environment(options.llm);
    if (!transport) {
      log << "warning: --advisor llm requested but DCSF_LLM_URL is not set; "
             "using the fallback rule\n";
      advisor_mode = AdvisorMode::Fallback;
    }
  }
  Advisor advisor(advisor_mode, std::move(transport), options.llm);
  RunResult result = run(options.mode, scenario, params, config, advisor);

  fs::create_directories(options.out);
  RunReport report;
  report.run_id = std::string(to_string(options.mode)) + "-seed" + std::to_string(config.seed);
  report.mode = options.mode;
  report.advisor = advisor_mode;
  report.seed = config.seed;
  report.frame = result.frame;
  report.llm_failures = advisor.llm_failures();

  Json config_json = {{"mode", std::string(to_string(options.mode))},
                      {"advisor", std::string(to_string(advisor_mode))},
                      {"llm_model", options.llm.model},
                      {"solver", to_json(config)},
                      {"params", to_json(params)}};
  write_json_file(options.out / "config.json", config_json);
  write_json_file(options.out / "scenario.json", to_json(scenario));

  std::ostringstream history;
  history << "iteration,sp,m3,hypervolume,p_c,p_m\n";
  for (const auto& h : result.history) {
    history << h.iteration << "," << num(h.sp) << "," << num(h.m3) << "," << num(h.hypervolume)
            << "," << num(h.p_c) << "," << num(h.p_m) << "\n";
  }
  write_text_file(options.out / "history.csv", history.str());

  std::ostringstream trajectory;
  trajectory << "generation,p_c,p_m,source\n";
  for (std::size_t g = 0; g < result.parameter_trajectory.size(); ++g) {
    const auto& u = result.parameter_trajectory[g];
    trajectory << g + 1 << "," << num(u.p_c) << "," << num(u.p_m) << "," << to_string(u.source)
               << "\n";
  }
  write_text_file(options.out / "trajectory.csv", trajectory.str());

  const Population& pop = result.population;
  std::vector<std::size_t> front = feasible_front(pop);
  report.front_feasible = !front.empty();
  if (front.empty() && !pop.empty()) front = nondominated_sort(pop).front();
  std::vector<Individual> members;
  for (std::size_t i : front) members.push_back(pop[i]);
  const auto objs = objectives_of(members);
  report.front_size = members.size();
  report.hypervolume = hypervolume(objs, result.frame);
  report.sp = spacing_metric(objs);
  report.m3 = max_spread_metric(objs);

  Json individuals = Json::array();
  for (const auto& m : members) individuals.push_back(to_json(m));
  write_json_file(options.out / "pareto.json",
                  {{"feasible", report.front_feasible}, {"individuals", individuals}});

  Json deployment = Json::object();
  if (const auto knee = knee_point(objs)) {
    report.knee = objs[*knee];
    const Individual& ind = members[*knee];
    Json clusters = Json::array();
    for (const auto& c : ind.assignment.clusters()) clusters.push_back(c);
    deployment = {{"front_index", *knee}, {"individual", to_json(ind)}, {"clusters", clusters}};
  }
  write_json_file(options.out / "deployment.json", deployment);

  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const char* name : {"config.json", "scenario.json", "history.csv", "trajectory.csv",
                           "pareto.json", "deployment.json", "report.json"}) {
    report.artifacts[name] = (options.out / name).string();
  }
  Json report_json = {{"run_id", report.run_id},
                      {"mode", std::string(to_string(report.mode))},
                      {"advisor", std::string(to_string(report.advisor))},
                      {"seed", report.seed},
                      {"wall_time_s", report.wall_time_s},
                      {"front_size", report.front_size},
                      {"front_feasible", report.front_feasible},
                      {"knee", report.knee ? to_json(*report.knee) : Json(nullptr)},
                      {"hypervolume", report.hypervolume},
                      {"hypervolume_frame", frame_json(report.frame)},
                      {"sp", report.sp},
                      {"m3", report.m3},
                      {"llm_failures", report.llm_failures},
                      {"artifacts", report.artifacts}};
  write_json_file(options.out / "report.json", report_json);

  log << report.run_id << ": front " << report.front_size
      << (report.front_feasible ? "" : " (no feasible member)") << ", HV "
      << short_num(report.hypervolume);
  if (report.knee) {
    log << ", knee f1 " << short_num(report.knee->f1) << " bps, f2 " << short_num(report.knee->f2)
        << " suts/s, f3 " << short_num(report.knee->f3) << " J";
  }
  log << ", " << short_num(report.wall_time_s) << " s -> " << options.out.string() << "\n";
  return report;
}

std::vector<Individual> load_front(const fs::path& run_dir) {
  const Json j = read_json_file(run_dir / "pareto.json");
  if (!j.is_object() || !j.contains("individuals") || !j["individuals"].is_array()) {
    throw std::invalid_argument((run_dir / "pareto.json").string() + ": no individuals array");
  }
  std::vector<Individual> out;
  for (const auto& item : j["individuals"]) out.push_back(individual_from_json(item));
  return out;
}

std::pair<double, double> joint_hypervolume(std::span<const ObjectiveTriple> a,
                                            std::span<const ObjectiveTriple> b) {
  const ObjectiveFrame frame = ObjectiveFrame::from_points(a, b);
  return {hypervolume(a, frame), hypervolume(b, frame)};
}

CompareResult cmd_compare(const std::vector<fs::path>& runs, const std::vector<fs::path>& pair_with,
                          const std::optional<fs::path>& out_dir, std::ostream& log) {
  if (runs.empty()) throw std::invalid_argument("compare needs at least one run directory");
  if (!pair_with.empty() && pair_with.size() != runs.size()) {
    throw std::invalid_argument("--pair-with needs exactly one directory per run");
  }
  std::vector<fs::path> all = runs;
  all.insert(all.end(), pair_with.begin(), pair_with.end());

  std::vector<std::vector<ObjectiveTriple>> fronts;
  std::vector<ObjectiveTriple> pooled;
  for (const auto& dir : all) {
    fronts.push_back(objectives_of(load_front(dir)));
    pooled.insert(pooled.end(), fronts.back().begin(), fronts.back().end());
  }
  const ObjectiveFrame shared = ObjectiveFrame::from_points(pooled);

  CompareResult result;
  for (std::size_t i = 0; i < all.size(); ++i) {
    CompareRow row;
    row.run = all[i].string();
    const fs::path report_path = all[i] / "report.json";
    if (fs::exists(report_path)) {
      const Json r = read_json_file(report_path);
      row.mode = r.value("mode", "");
      row.seed = r.value("seed", std::uint64_t{0});
    }
    row.front_size = fronts[i].size();
    if (const auto knee = knee_point(fronts[i])) row.knee = fronts[i][*knee];
    row.hypervolume = hypervolume(fronts[i], shared);
    row.sp = spacing_metric(fronts[i]);
    row.m3 = max_spread_metric(fronts[i]);
    result.rows.push_back(row);
  }

  if (pair_with.empty()) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
      for (std::size_t j = 0; j < runs.size(); ++j) {
        if (i == j) continue;
        const double a = result.rows[i].hypervolume;
        const double b = result.rows[j].hypervolume;
        result.ratios.push_back({result.rows[i].run, result.rows[j].run, a, b, a / b});
      }
    }
  } else {
    std::vector<double> values;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const auto [a, b] = joint_hypervolume(fronts[i], fronts[runs.size() + i]);
      result.ratios.push_back({runs[i].string(), pair_with[i].string(), a, b, a / b});
      values.push_back(a / b);
      if (a >= b) ++result.wins;
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    result.median_ratio =
        n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  }

  std::ostringstream table;
  table << "run,mode,seed,front_size,knee_f1,knee_f2,knee_f3,hypervolume,sp,m3\n";
  for (const auto& r : result.rows) {
    table << r.run << "," << r.mode << "," << r.seed << "," << r.front_size << ","
          << num(r.knee.f1) << "," << num(r.knee.f2) << "," << num(r.knee.f3) << ","
          << num(r.hypervolume) << "," << num(r.sp) << "," << num(r.m3) << "\n";
  }
  std::ostringstream ratios;
  ratios << "a,b,hv_a,hv_b,ratio\n";
  for (const auto& r : result.ratios) {
    ratios << r.a << "," << r.b << "," << num(r.hv_a) << "," << num(r.hv_b) << "," << num(r.ratio)
           << "\n";
  }
  log << table.str() << "\n" << ratios.str();
  if (result.median_ratio) {
    log << "\nmedian hypervolume ratio " << num(*result.median_ratio) << ", " << result.wins
        << "/" << runs.size() << " pairs with ratio >= 1\n";
  }
  if (out_dir) {
    fs::create_directories(*out_dir);
    write_text_file(*out_dir / "compare.csv", table.str());
    write_text_file(*out_dir / "ratios.csv", ratios.str());
  }
  return result;
}

void cmd_export_deployment(const fs::path& run_dir, const fs::path& out_dir, std::ostream& log) {
  const Scenario scenario = load_scenario(run_dir / "scenario.json");
  const Json deployment = read_json_file(run_dir / "deployment.json");
  if (!deployment.contains("individual")) {
    throw std::invalid_argument((run_dir / "deployment.json").string() +
                                ": run has no knee deployment");
  }
  const Individual ind = individual_from_json(deployment["individual"]);
  if (ind.n_uavs() != scenario.n_uavs()) {
    throw std::invalid_argument("deployment does not match the scenario's UAV count");
  }
  const Association assoc = associate_users(scenario, ind.positions);
  const auto clusters = ind.assignment.clusters();
  auto kind = [&](std::size_t uav) {
    return clusters[ind.assignment.label(uav) - 1].size() == 1 ? "singleton" : "cluster";
  };

  std::ostringstream users;
  users << "user,x,y,z,uav,cluster,cluster_kind\n";
  for (std::size_t u = 0; u < scenario.n_users(); ++u) {
    const auto& p = scenario.users[u].pos;
    const std::size_t v = assoc.uav_of_user[u];
    users << u << "," << num(p.x) << "," << num(p.y) << "," << num(p.z) << "," << v << ","
          << ind.assignment.label(v) << "," << kind(v) << "\n";
  }
  std::ostringstream uavs;
  uavs << "uav,x,y,z,initial_x,initial_y,initial_z,weight,cluster,cluster_size,k,users,kind\n";
  for (std::size_t v = 0; v < ind.n_uavs(); ++v) {
    const auto& p = ind.positions[v];
    const auto& q = scenario.uavs[v].initial_pos;
    const int label = ind.assignment.label(v);
    uavs << v << "," << num(p.x) << "," << num(p.y) << "," << num(p.z) << "," << num(q.x) << ","
         << num(q.y) << "," << num(q.z) << "," << num(ind.weights[v]) << "," << label << ","
         << clusters[label - 1].size() << "," << ind.symbols[label - 1] << ","
         << assoc.users_of_uav[v].size() << "," << kind(v) << "\n";
  }
  fs::create_directories(out_dir);
  write_text_file(out_dir / "users.csv", users.str());
  write_text_file(out_dir / "uavs.csv", uavs.str());
  log << "wrote " << (out_dir / "users.csv").string() << " and " << (out_dir / "uavs.csv").string()
      << " (" << scenario.n_users() << " users, " << ind.n_uavs() << " UAVs, "
      << clusters.size() << " clusters)\n";
}

}  // namespace dcsf
