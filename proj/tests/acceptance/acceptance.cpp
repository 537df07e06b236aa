// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any selected criterion fails. Criteria can be selected by
// number on the command line; all run by default.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "dcsf/beamforming.hpp"
#include "dcsf/cli.hpp"
#include "dcsf/energy.hpp"
#include "dcsf/pareto.hpp"
#include "dcsf/rotor.hpp"
#include "dcsf/semantic.hpp"
#include "dcsf/solver.hpp"
#include "support/builders.hpp"
#include "support/fuzz_bodies.hpp"
#include "support/mock_llm.hpp"
#include "support/reference_model.hpp"

using namespace dcsf;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "dcsf_acceptance" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 100 arrays with N <= 6 elements, every pairwise spacing <= 10 lambda and
// weights in (0, 1].
std::vector<ArraySpec> test_arrays() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> n(1, 6);
  const double lambda = SystemParams{}.wavelength_m;
  const double side = 10.0 * lambda / std::sqrt(3.0);
  std::vector<ArraySpec> arrays;
  for (int i = 0; i < 100; ++i) {
    ArraySpec a;
    a.wavelength = lambda;
    const std::size_t count = n(rng);
    for (std::size_t e = 0; e < count; ++e) {
      a.positions.push_back({side * u(rng), side * u(rng), side * u(rng)});
      a.weights.push_back(1.0 - u(rng));
    }
    arrays.push_back(std::move(a));
  }
  return arrays;
}

Outcome c1() {
  const auto t0 = std::chrono::steady_clock::now();
  const QuadratureSpec quad{512, 1024};
  const double eta = 0.9;
  double worst = 0.0;
  for (const auto& a : test_arrays()) {
    const GainPattern g(a, eta);
    const double mean = sphere_average([&](Direction d) { return g(d); }, quad);
    worst = std::max(worst, std::abs(mean - eta) / eta);
  }
  const double t = seconds_since(t0);
  return {worst < 0.01 && t < 120.0,
          "worst |avg G - eta|/eta " + fmt("%.3g", worst) + ", " + fmt("%.1f", t) + " s"};
}

Outcome c2() {
  double worst = 0.0;
  for (const auto& a : test_arrays()) {
    const double exact = denominator_closed_form(a);
    worst = std::max(worst, std::abs(denominator_quadrature(a, {512, 1024}) - exact) / exact);
  }
  return {worst < 1e-3, "worst relative difference " + fmt("%.3g", worst)};
}

Outcome c3() {
  SystemParams prm;
  Scenario s = testutil::small_scenario(1, 8, 1);
  const double spacing = 60.0 * prm.wavelength_m;
  bool ok = true;
  std::string detail;
  for (std::size_t n : {2u, 4u, 8u}) {
    // Elements on a horizontal grid with the BS straight above the
    // centroid, so every path difference toward the BS is zero.
    std::vector<Position3> q;
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v) {
      q.push_back({200 + spacing * static_cast<double>(v % 4),
                   200 + spacing * static_cast<double>(v / 4), 100});
      members.push_back(v);
    }
    const std::vector<double> w(n, 1.0);
    Position3 c{};
    for (const auto& p : q) {
      c.x += p.x / static_cast<double>(n);
      c.y += p.y / static_cast<double>(n);
      c.z += p.z / static_cast<double>(n);
    }
    s.bs_pos = {c.x, c.y, 5000};
    const std::vector<Position3> single{c};
    const std::vector<std::size_t> solo{0};
    const double ratio =
        cluster_snr(s, members, q, w, prm) / cluster_snr(s, solo, single, w, prm);
    const double target = static_cast<double>(n * n) * prm.array_efficiency;
    const double err = std::abs(ratio - target) / target;
    ok = ok && err < 0.05;
    detail += "N=" + std::to_string(n) + " ratio " + fmt("%.4g", ratio) + " ";
  }
  return {ok, detail + "(target N^2 eta)"};
}

Outcome c4() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> size(1, 50);
  std::uniform_int_distribution<int> coarse(0, 4);
  std::size_t mismatches = 0;
  for (int pool_index = 0; pool_index < 1000; ++pool_index) {
    const bool ties = pool_index % 2 == 0;
    std::vector<Individual> pool(size(rng));
    std::vector<ref::Obj> objs;
    std::vector<double> viol;
    for (auto& ind : pool) {
      ind.objectives = ties ? ObjectiveTriple{double(coarse(rng)), double(coarse(rng)),
                                              double(coarse(rng))}
                            : ObjectiveTriple{u(rng), u(rng), u(rng)};
      ind.violation = u(rng) < 0.2 ? (ties ? 0.5 * coarse(rng) : u(rng)) : 0.0;
      objs.push_back({ind.objectives.f1, ind.objectives.f2, ind.objectives.f3});
      viol.push_back(ind.violation);
    }
    auto fronts = nondominated_sort(pool);
    for (auto& f : fronts) std::sort(f.begin(), f.end());
    const auto expect = ref::fronts(objs, viol);
    if (fronts != expect) {
      ++mismatches;
      continue;
    }
    for (const auto& f : fronts) {
      std::vector<ObjectiveTriple> t;
      std::vector<ref::Obj> o;
      for (std::size_t i : f) {
        t.push_back(pool[i].objectives);
        o.push_back(objs[i]);
      }
      if (crowding_distance(t) != ref::crowding(o)) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches over 1000 pools"};
}

struct MergeChoice {
  std::vector<int> labels;
  std::vector<int> k;
  double f2 = 0.0;
};

std::optional<MergeChoice> best_merge(const Scenario& s, const Individual& ind,
                                      const std::vector<int>& labels, const std::vector<int>& k,
                                      const SystemParams& prm, double reference) {
  int n = 0;
  for (int l : labels) n = std::max(n, l);
  std::optional<MergeChoice> out;
  double best = reference;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      MergeChoice c{labels, k, 0.0};
      for (int& l : c.labels) {
        if (l == j) l = i;
        else if (l > j) --l;
      }
      c.k.erase(c.k.begin() + (j - 1));
      c.f2 = ref::f2(s, c.labels, ind.positions, ind.weights, c.k, prm);
      if (c.f2 > best) {
        best = c.f2;
        out = c;
      }
    }
  }
  return out;
}

// Every applied merge must be the exhaustive best-gain merge and must raise
// f2 above its value just before the merge. Both baselines are checked; the
// stale one is the default.
Outcome c5() {
  SystemParams prm;
  std::mt19937_64 rng(5);
  std::size_t merges[2] = {0, 0}, wrong[2] = {0, 0}, not_increasing[2] = {0, 0};
  std::size_t merged_runs = 0;
  for (int instance = 0; instance < 50; ++instance) {
    const auto [s, start] =
        testutil::merge_prone_instance(2 + instance % 4, 500 + instance, prm, rng);
    for (int m = 0; m < 2; ++m) {
      const auto mode = m == 0 ? GcaBaseline::Stale : GcaBaseline::Refreshed;
      Individual ind = start;
      auto labels = ind.assignment.labels();
      auto k = ind.symbols;
      const auto records = gca_individual(ind, s, prm, mode);
      merged_runs += !records.empty();
      for (const auto& r : records) {
        ++merges[m];
        const auto expect = best_merge(s, start, labels, k, prm, r.baseline);
        if (!expect || expect->labels != r.after.labels()) {
          ++wrong[m];
          break;
        }
        if (!(r.f2_after > r.f2_before) || !(r.f2_after > r.baseline)) ++not_increasing[m];
        labels = expect->labels;
        k = expect->k;
      }
      const double final_ref = mode == GcaBaseline::Stale ? start.objectives.f2 : ind.objectives.f2;
      if (best_merge(s, start, labels, k, prm, final_ref)) ++wrong[m];
    }
  }
  std::string detail;
  for (int m = 0; m < 2; ++m) {
    detail += std::string(m == 0 ? "stale" : "refreshed") + ": " + std::to_string(merges[m]) +
              " merges, " + std::to_string(wrong[m]) + " not exhaustive-best, " +
              std::to_string(not_increasing[m]) + " not raising f2; ";
  }
  const bool ok = merges[0] > 0 && merges[1] > 0 && wrong[0] + wrong[1] == 0 &&
                  not_increasing[0] + not_increasing[1] == 0;
  return {ok, detail + std::to_string(merged_runs) + " of 100 runs merged"};
}

Outcome c6() {
  SystemParams prm;
  std::mt19937_64 rng(6);
  std::size_t mismatched = 0, clusters = 0;
  for (int i = 0; i < 50; ++i) {
    const auto s = testutil::small_scenario(5, 1 + i % 6, 600 + i);
    auto ind = testutil::random_individual(s, prm, rng);
    std::vector<int> k = ind.symbols;
    const auto labels = ind.assignment.labels();
    for (std::size_t c = 0; c < k.size(); ++c) {
      int best = 1;
      double best_f2 = -1.0;
      for (int kk = 1; kk <= 20; ++kk) {
        k[c] = kk;
        const double f2 = ref::f2(s, labels, ind.positions, ind.weights, k, prm);
        if (f2 > best_f2) best_f2 = f2, best = kk;
      }
      k[c] = best;
    }
    gso_individual(ind, s, prm);
    clusters += k.size();
    for (std::size_t c = 0; c < k.size(); ++c) mismatched += ind.symbols[c] != k[c];
  }
  return {mismatched == 0,
          std::to_string(mismatched) + " of " + std::to_string(clusters) + " k values differ"};
}

Outcome c7() {
  const RotorModel r;
  SystemParams prm;
  const bool hover = hover_power(r) == r.blade_profile_power + r.induced_power &&
                     horizontal_power(r, 0.0) == r.blade_profile_power + r.induced_power;
  const bool descent = vertical_power(r, -3.0) == 0.0 &&
                       flight_energy(Position3{0, 0, 100}, Position3{0, 0, 90}, prm) == 0.0;
  const double climb = flight_energy(Position3{0, 0, 90}, Position3{0, 0, 100}, prm);
  return {hover && descent && climb == 200.0 && prm.rotor.weight == 20.0 &&
              prm.cruise_speed_z == 2.0,
          "hover " + fmt("%.17g", hover_power(r)) + " W, climb " + fmt("%.17g", climb) + " J"};
}

Outcome c8() {
  std::ostringstream log;
  const auto a = scratch("c8_a"), b = scratch("c8_b");
  for (const auto& dir : {a, b}) {
    SolveOptions o;
    o.mode = SolverMode::LlmAoa;
    o.config.advisor_mode = AdvisorMode::Static;
    o.config.seed = 7;
    o.generate.seed = 7;
    o.out = dir;
    cmd_solve(o, log);
  }
  const bool hist = slurp(a / "history.csv") == slurp(b / "history.csv");
  const bool front = slurp(a / "pareto.json") == slurp(b / "pareto.json");
  return {hist && front && !slurp(a / "history.csv").empty(),
          std::string("history.csv ") + (hist ? "identical" : "differs") + ", pareto.json " +
              (front ? "identical" : "differs")};
}

Outcome c9() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto root = scratch("c9");
  std::vector<fs::path> guided, plain;
  std::ostringstream log;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SolveOptions o;
    o.generate.users = 50;
    o.generate.uavs = 4;
    o.generate.area = 500;
    o.generate.seed = seed;
    o.config.population = 20;
    o.config.ao_iterations = 10;
    o.config.local_generations = 5;
    o.config.seed = seed;
    o.mode = SolverMode::LlmAoa;
    o.config.advisor_mode = AdvisorMode::Fallback;
    o.out = root / ("llm-aoa-" + std::to_string(seed));
    cmd_solve(o, log);
    guided.push_back(o.out);
    o.mode = SolverMode::Aoa;
    o.config.advisor_mode = AdvisorMode::Static;
    o.out = root / ("aoa-" + std::to_string(seed));
    cmd_solve(o, log);
    plain.push_back(o.out);
  }
  const auto result = cmd_compare(guided, plain, root, log);
  const double t = seconds_since(t0);
  const double median = result.median_ratio.value_or(0.0);
  std::string ratios;
  for (const auto& r : result.ratios) ratios += fmt("%.3f ", r.ratio);
  return {result.wins >= 6 && median >= 1.0 && t < 600.0,
          std::to_string(result.wins) + "/10 seeds with HV ratio >= 1, median ratio " +
              fmt("%.4f", median) + ", " + fmt("%.1f", t) + " s; ratios " + ratios};
}

Outcome c10() {
  std::ostringstream log;
  SolveOptions o;
  o.config.ao_iterations = 20;
  o.out = scratch("c10");
  const auto r = cmd_solve(o, log);
  if (!r.knee) return {false, "no knee point"};
  const double f1 = r.knee->f1, f2 = r.knee->f2;
  const bool ok1 = f1 >= 1.10e8 / 5 && f1 <= 1.10e8 * 5;
  const bool ok2 = f2 >= 4.12e6 / 5 && f2 <= 4.12e6 * 5;
  return {ok1 && ok2, "knee f1 " + fmt("%.3g", f1) + " bps (1.10e8), f2 " + fmt("%.3g", f2) +
                          " suts/s (4.12e6)"};
}

Outcome c11() {
  testutil::MockLlm mock;
  LlmSettings settings;
  settings.timeout = std::chrono::milliseconds(2000);
  settings.retries = 0;
  Advisor advisor(AdvisorMode::Llm,
                  std::make_unique<HttpTransport>(mock.url("/fuzz"), "", settings), settings);
  AdvisorInput in;
  in.sp = 0.3;
  in.m3 = 1.0;
  in.window = {{0.2, 1.0}, {0.2, 1.01}};
  const auto rule = fallback_rule(in);
  std::mt19937_64 rng(11);
  std::size_t out_of_bounds = 0, missed_fallback = 0, malformed = 0, wrong_source = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto body = testutil::fuzz_body(rng);
    mock.set_fuzz_body(body.body);
    const auto u = advisor.advise(in);
    if (u.p_c < kCrossoverMin || u.p_c > kCrossoverMax || u.p_m < kMutationMin ||
        u.p_m > kMutationMax) {
      ++out_of_bounds;
    }
    if (body.malformed) {
      ++malformed;
      if (u.source != UpdateSource::Fallback || u.p_c != rule.p_c || u.p_m != rule.p_m) {
        ++missed_fallback;
      }
    } else if (u.source != UpdateSource::Llm) {
      ++wrong_source;
    }
  }
  return {out_of_bounds == 0 && missed_fallback == 0 && wrong_source == 0,
          "1000 bodies (" + std::to_string(malformed) + " malformed): " +
              std::to_string(out_of_bounds) + " out of bounds, " +
              std::to_string(missed_fallback) + " malformed without fallback, " +
              std::to_string(wrong_source) + " well-formed rejected"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"beam-pattern normalization", c1},
      {"closed-form vs quadrature denominator", c2},
      {"collaborative gain scaling", c3},
      {"sorting and crowding oracle equivalence", c4},
      {"GCA greedy optimality", c5},
      {"GSO exactness", c6},
      {"energy closed forms", c7},
      {"determinism", c8},
      {"directional llm-aoa vs aoa", c9},
      {"scale sanity vs headline values", c10},
      {"advisor robustness", c11}};
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));
  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && selected.count(id) == 0) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_pass = all_pass && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[i].first
              << " (" << o.detail << ")" << std::endl;
  }
  return all_pass ? 0 : 1;
}
