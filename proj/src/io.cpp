#include "dcsf/io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dcsf {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

double as_double(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::uint64_t as_u64(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(where, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::size_t as_size(const Json& j, const std::string& where) {
  return static_cast<std::size_t>(as_u64(j, where));
}

// Reads optional keys of one object and rejects anything it was not asked for.
class Fields {
 public:
  Fields(const Json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) fail(where_, "expected an object");
  }

  const Json* find(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  std::string path(const std::string& key) const { return where_ + "." + key; }

  void number(const std::string& key, double& out) {
    if (const Json* v = find(key)) out = as_double(*v, path(key));
  }
  void integer(const std::string& key, int& out) {
    if (const Json* v = find(key)) out = as_int(*v, path(key));
  }
  void size(const std::string& key, std::size_t& out) {
    if (const Json* v = find(key)) out = as_size(*v, path(key));
  }
  void boolean(const std::string& key, bool& out) {
    if (const Json* v = find(key)) {
      if (!v->is_boolean()) fail(path(key), "expected true or false");
      out = v->get<bool>();
    }
  }
  void text(const std::string& key, std::string& out) {
    if (const Json* v = find(key)) {
      if (!v->is_string()) fail(path(key), "expected a string");
      out = v->get<std::string>();
    }
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) fail(path(it.key()), "unknown key");
    }
  }

 private:
  const Json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

Position3 position_at(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) fail(where, "expected [x, y, z]");
  return {as_double(j[0], where + "[0]"), as_double(j[1], where + "[1]"),
          as_double(j[2], where + "[2]")};
}

Interval interval_at(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected [min, max]");
  return {as_double(j[0], where + "[0]"), as_double(j[1], where + "[1]")};
}

const Json& array_at(const Json* j, const std::string& where) {
  if (j == nullptr) fail(where, "missing");
  if (!j->is_array()) fail(where, "expected an array");
  return *j;
}

}  // namespace

Json to_json(const Position3& p) { return Json::array({p.x, p.y, p.z}); }

Position3 position_from_json(const Json& j) { return position_at(j, "position"); }

Json to_json(const Bounds& b) {
  return {{"x", {b.x.min, b.x.max}}, {"y", {b.y.min, b.y.max}}, {"z", {b.z.min, b.z.max}}};
}

Bounds bounds_from_json(const Json& j) {
  Fields f(j, "bounds");
  Bounds b;
  const Json* x = f.find("x");
  const Json* y = f.find("y");
  const Json* z = f.find("z");
  if (!x || !y || !z) fail("bounds", "x, y and z are all required");
  b.x = interval_at(*x, "bounds.x");
  b.y = interval_at(*y, "bounds.y");
  b.z = interval_at(*z, "bounds.z");
  f.finish();
  if (!b.well_ordered()) fail("bounds", "every axis needs finite min < max");
  return b;
}

Json to_json(const RotorModel& r) {
  return {{"blade_profile_power", r.blade_profile_power},
          {"induced_power", r.induced_power},
          {"tip_speed", r.tip_speed},
          {"induced_velocity", r.induced_velocity},
          {"fuselage_drag_ratio", r.fuselage_drag_ratio},
          {"air_density", r.air_density},
          {"rotor_solidity", r.rotor_solidity},
          {"disk_area", r.disk_area},
          {"weight", r.weight}};
}

RotorModel rotor_from_json(const Json& j) {
  Fields f(j, "rotor");
  RotorModel r;
  f.number("blade_profile_power", r.blade_profile_power);
  f.number("induced_power", r.induced_power);
  f.number("tip_speed", r.tip_speed);
  f.number("induced_velocity", r.induced_velocity);
  f.number("fuselage_drag_ratio", r.fuselage_drag_ratio);
  f.number("air_density", r.air_density);
  f.number("rotor_solidity", r.rotor_solidity);
  f.number("disk_area", r.disk_area);
  f.number("weight", r.weight);
  f.finish();
  r.validate();
  return r;
}

Json to_json(const SimilarityModel& model) {
  Json rows = Json::array();
  for (const auto& p : model.table()) {
    rows.push_back({{"k", p.k}, {"a", p.floor}, {"b", p.midpoint_db}, {"c", p.slope}});
  }
  return rows;
}

SimilarityModel similarity_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("similarity", "expected a non-empty array of {k, a, b, c}");
  std::vector<SimilarityPoint> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "similarity[" + std::to_string(i) + "]";
    Fields f(j[i], where);
    SimilarityPoint p;
    const Json* k = f.find("k");
    const Json* a = f.find("a");
    const Json* b = f.find("b");
    const Json* c = f.find("c");
    if (!k || !a || !b || !c) fail(where, "k, a, b and c are all required");
    p.k = as_double(*k, where + ".k");
    p.floor = as_double(*a, where + ".a");
    p.midpoint_db = as_double(*b, where + ".b");
    p.slope = as_double(*c, where + ".c");
    f.finish();
    rows.push_back(p);
  }
  return SimilarityModel(std::move(rows));
}

std::string_view to_string(C7Mode mode) {
  return mode == C7Mode::AlwaysOptimize ? "always-optimize" : "literal-compare";
}

std::optional<C7Mode> parse_c7_mode(std::string_view text) {
  if (text == "always-optimize") return C7Mode::AlwaysOptimize;
  if (text == "literal-compare") return C7Mode::LiteralCompare;
  return std::nullopt;
}

Json to_json(const SystemParams& p) {
  return {{"bandwidth_hz", p.bandwidth_hz},
          {"noise_density_dbm_hz", p.noise_density_dbm_hz},
          {"wavelength_m", p.wavelength_m},
          {"carrier_hz", p.carrier_hz()},
          {"psi", p.psi},
          {"beta", p.beta},
          {"mu_los_db", p.mu_los_db},
          {"mu_nlos_db", p.mu_nlos_db},
          {"array_efficiency", p.array_efficiency},
          {"min_separation_m", p.min_separation_m},
          {"k_min", p.k_min},
          {"k_max", p.k_max},
          {"xi_threshold", p.xi_threshold},
          {"info_per_sentence", p.info_per_sentence},
          {"words_per_sentence", p.words_per_sentence},
          {"w_min", p.w_min},
          {"w_max", p.w_max},
          {"cruise_speed_xy", p.cruise_speed_xy},
          {"cruise_speed_z", p.cruise_speed_z},
          {"user_tx_power_w", p.user_tx_power_w},
          {"uav_tx_power_w", p.uav_tx_power_w},
          {"include_hover_energy", p.include_hover_energy},
          {"hover_time_s", p.hover_time_s},
          {"c7_mode", std::string(to_string(p.c7_mode))},
          {"rotor", to_json(p.rotor)},
          {"similarity", to_json(p.similarity)}};
}

SystemParams params_from_json(const Json& j) {
  Fields f(j, "params");
  SystemParams p;
  f.number("bandwidth_hz", p.bandwidth_hz);
  f.number("noise_density_dbm_hz", p.noise_density_dbm_hz);
  f.number("wavelength_m", p.wavelength_m);
  if (const Json* carrier = f.find("carrier_hz")) {
    // Informational only; the carrier always follows the wavelength.
    const double given = as_double(*carrier, "params.carrier_hz");
    if (std::abs(given - p.carrier_hz()) > 1e-6 * p.carrier_hz()) {
      fail("params.carrier_hz", "does not match c / wavelength_m");
    }
  }
  f.number("psi", p.psi);
  f.number("beta", p.beta);
  f.number("mu_los_db", p.mu_los_db);
  f.number("mu_nlos_db", p.mu_nlos_db);
  f.number("array_efficiency", p.array_efficiency);
  f.number("min_separation_m", p.min_separation_m);
  f.integer("k_min", p.k_min);
  f.integer("k_max", p.k_max);
  f.number("xi_threshold", p.xi_threshold);
  f.number("info_per_sentence", p.info_per_sentence);
  f.number("words_per_sentence", p.words_per_sentence);
  f.number("w_min", p.w_min);
  f.number("w_max", p.w_max);
  f.number("cruise_speed_xy", p.cruise_speed_xy);
  f.number("cruise_speed_z", p.cruise_speed_z);
  f.number("user_tx_power_w", p.user_tx_power_w);
  f.number("uav_tx_power_w", p.uav_tx_power_w);
  f.boolean("include_hover_energy", p.include_hover_energy);
  f.number("hover_time_s", p.hover_time_s);
  std::string c7(to_string(p.c7_mode));
  f.text("c7_mode", c7);
  const auto mode = parse_c7_mode(c7);
  if (!mode) fail("params.c7_mode", "expected always-optimize or literal-compare");
  p.c7_mode = *mode;
  if (const Json* r = f.find("rotor")) p.rotor = rotor_from_json(*r);
  if (const Json* s = f.find("similarity")) {
    p.similarity = similarity_from_json(*s);
  } else if (j.contains("k_min") || j.contains("k_max")) {
    p.similarity = SimilarityModel::default_table(p.k_min, std::max(p.k_min, p.k_max));
  }
  f.finish();
  p.validate();
  return p;
}

Json to_json(const Scenario& s) {
  Json users = Json::array();
  Json uavs = Json::array();
  for (const auto& u : s.users) users.push_back(to_json(u.pos));
  for (const auto& v : s.uavs) uavs.push_back(to_json(v.initial_pos));
  Json j = {{"users", users},
            {"uavs_initial", uavs},
            {"bs", to_json(s.bs_pos)},
            {"bounds", to_json(s.bounds)},
            {"seed", s.seed}};
  auto power_field = [](const auto& items) {
    bool uniform = true;
    for (const auto& it : items) uniform = uniform && it.tx_power == items.front().tx_power;
    if (uniform && !items.empty()) return Json(items.front().tx_power);
    Json arr = Json::array();
    for (const auto& it : items) arr.push_back(it.tx_power);
    return arr;
  };
  j["user_tx_power"] = power_field(s.users);
  j["uav_tx_power"] = power_field(s.uavs);
  return j;
}

Scenario scenario_from_json(const Json& j) {
  Fields f(j, "scenario");
  Scenario s;
  const Json& users = array_at(f.find("users"), "scenario.users");
  const Json& uavs = array_at(f.find("uavs_initial"), "scenario.uavs_initial");
  const Json* bs = f.find("bs");
  if (!bs) fail("scenario.bs", "missing");
  s.bs_pos = position_at(*bs, "scenario.bs");
  const Json* bounds = f.find("bounds");
  if (!bounds) fail("scenario.bounds", "missing");
  s.bounds = bounds_from_json(*bounds);
  if (const Json* seed = f.find("seed")) s.seed = as_u64(*seed, "scenario.seed");

  for (std::size_t i = 0; i < users.size(); ++i) {
    GroundUser u;
    u.id = i;
    u.pos = position_at(users[i], "scenario.users[" + std::to_string(i) + "]");
    s.users.push_back(u);
  }
  for (std::size_t i = 0; i < uavs.size(); ++i) {
    Uav v;
    v.id = i;
    v.initial_pos = position_at(uavs[i], "scenario.uavs_initial[" + std::to_string(i) + "]");
    v.pos = v.initial_pos;
    s.uavs.push_back(v);
  }
  auto apply_power = [&](const char* key, auto& items) {
    const Json* p = f.find(key);
    if (!p) return;
    const std::string where = std::string("scenario.") + key;
    if (p->is_array()) {
      if (p->size() != items.size()) fail(where, "needs one entry per item");
      for (std::size_t i = 0; i < items.size(); ++i) {
        items[i].tx_power = as_double((*p)[i], where + "[" + std::to_string(i) + "]");
      }
    } else {
      const double w = as_double(*p, where);
      for (auto& it : items) it.tx_power = w;
    }
  };
  apply_power("user_tx_power", s.users);
  apply_power("uav_tx_power", s.uavs);
  f.finish();
  s.check();
  return s;
}

Json to_json(const ObjectiveTriple& t) { return {{"f1", t.f1}, {"f2", t.f2}, {"f3", t.f3}}; }

Json to_json(const Individual& ind) {
  Json q = Json::array();
  for (const auto& p : ind.positions) q.push_back(to_json(p));
  return {{"c", ind.assignment.labels()},
          {"Q", q},
          {"w", ind.weights},
          {"k", ind.symbols},
          {"objectives", to_json(ind.objectives)},
          {"violation", ind.violation}};
}

Individual individual_from_json(const Json& j) {
  Fields f(j, "individual");
  Individual ind;
  const Json& c = array_at(f.find("c"), "individual.c");
  const Json& q = array_at(f.find("Q"), "individual.Q");
  const Json& w = array_at(f.find("w"), "individual.w");
  const Json& k = array_at(f.find("k"), "individual.k");
  std::vector<int> labels;
  for (std::size_t i = 0; i < c.size(); ++i) {
    labels.push_back(as_int(c[i], "individual.c[" + std::to_string(i) + "]"));
  }
  ind.assignment = ClusterAssignment(std::move(labels));
  for (std::size_t i = 0; i < q.size(); ++i) {
    ind.positions.push_back(position_at(q[i], "individual.Q[" + std::to_string(i) + "]"));
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    ind.weights.push_back(as_double(w[i], "individual.w[" + std::to_string(i) + "]"));
  }
  for (std::size_t i = 0; i < k.size(); ++i) {
    ind.symbols.push_back(as_int(k[i], "individual.k[" + std::to_string(i) + "]"));
  }
  if (const Json* o = f.find("objectives")) {
    Fields of(*o, "individual.objectives");
    of.number("f1", ind.objectives.f1);
    of.number("f2", ind.objectives.f2);
    of.number("f3", ind.objectives.f3);
    of.finish();
    ind.evaluated = true;
  }
  f.number("violation", ind.violation);
  f.finish();
  if (ind.positions.size() != ind.assignment.size() || ind.weights.size() != ind.assignment.size()) {
    fail("individual", "c, Q and w must have the same length");
  }
  return ind;
}

Json to_json(const SolverConfig& c) {
  return {{"population", c.population},
          {"ao_iterations", c.ao_iterations},
          {"local_generations", c.local_generations},
          {"crossover_prob", c.crossover_prob},
          {"mutation_prob", c.mutation_prob},
          {"sbx_eta", c.sbx_eta},
          {"poly_eta", c.poly_eta},
          {"advisor_mode", std::string(to_string(c.advisor_mode))},
          {"seed", c.seed},
          {"gca_baseline", std::string(to_string(c.gca_baseline))}};
}

SolverConfig config_from_json(const Json& j) {
  Fields f(j, "solver");
  SolverConfig c;
  f.size("population", c.population);
  f.size("ao_iterations", c.ao_iterations);
  f.size("local_generations", c.local_generations);
  f.number("crossover_prob", c.crossover_prob);
  f.number("mutation_prob", c.mutation_prob);
  f.number("sbx_eta", c.sbx_eta);
  f.number("poly_eta", c.poly_eta);
  std::string advisor(to_string(c.advisor_mode));
  f.text("advisor_mode", advisor);
  const auto mode = parse_advisor_mode(advisor);
  if (!mode) fail("solver.advisor_mode", "expected llm, fallback or static");
  c.advisor_mode = *mode;
  if (const Json* seed = f.find("seed")) c.seed = as_u64(*seed, "solver.seed");
  std::string baseline(to_string(c.gca_baseline));
  f.text("gca_baseline", baseline);
  const auto b = parse_gca_baseline(baseline);
  if (!b) fail("solver.gca_baseline", "expected stale or refreshed");
  c.gca_baseline = *b;
  f.finish();
  c.validate();
  return c;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  Json j = Json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument(path.string() + ": not valid JSON");
  return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

SimilarityModel load_similarity_table(const std::filesystem::path& path) {
  return similarity_from_json(read_json_file(path));
}

Scenario load_scenario(const std::filesystem::path& path) {
  return scenario_from_json(read_json_file(path));
}

SystemParams load_params(const std::filesystem::path& path) {
  return params_from_json(read_json_file(path));
}

}  // namespace dcsf
