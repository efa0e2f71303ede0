#include "wbfv/config.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "wbfv/bfe.hpp"
#include "wbfv/burgers.hpp"
#include "wbfv/errors.hpp"
#include "wbfv/profiles.hpp"

namespace wbfv {

namespace {

// Synthetic 12-segment gravity polyline: oscillates through the full
// +-981 cm/s^2 range along a 10 cm vessel.
std::vector<std::pair<double, double>> default_polyline() {
  const double g = kGravityCgs;
  const double f[13] = {1.0,  0.70710678118654752, 0.0, -0.70710678118654752,
                        -1.0, -0.70710678118654752, 0.0, 0.70710678118654752,
                        1.0,  0.70710678118654752, 0.0, -0.70710678118654752,
                        -1.0};
  std::vector<std::pair<double, double>> p;
  for (int j = 0; j <= 12; ++j)
    p.emplace_back(10.0 * j / 12.0, g * f[j]);
  return p;
}

ScenarioConfig bfe_base() {
  ScenarioConfig c;
  c.model_kind = ScenarioConfig::ModelKind::kBfe;
  c.x_a = 0.0;
  c.x_b = 10.0;
  c.cells = 4;
  c.t_final = 10.0;
  c.cfl = 0.8;
  c.dt_max = 1.0;
  c.left = {BoundarySpec::Kind::kReflective, 0.0};
  c.right = {BoundarySpec::Kind::kFixedPressure, 60.0 * kMmhgToCgs};
  c.epsilon = 1e-2;
  c.calibrate_sound_speed = 400.0;
  // Power-law velocity profile (zeta = 9), the usual choice for arterial
  // network models; decays start-up transients well before t_final.
  c.friction = -22.0 * 3.14159265358979323846 * 0.04 / 1.05;
  return c;
}

}  // namespace

ScenarioConfig preset_scenario(const std::string& name) {
  if (name == "burgers-steady") {
    ScenarioConfig c;
    c.name = name;
    c.prefix = "burgers";
    c.model_kind = ScenarioConfig::ModelKind::kBurgers;
    c.x_a = -1.0;
    c.x_b = 1.0;
    c.cells = 50;
    c.t_final = 40.0;
    c.cfl = 0.9;
    c.left = {BoundarySpec::Kind::kDirichlet, burgers_boundary_value(-1.0)};
    c.right = {BoundarySpec::Kind::kTransparent, 0.0};
    c.reference = ScenarioConfig::Reference::kAnalytic;
    return c;
  }
  if (name == "s1") {
    ScenarioConfig c = bfe_base();
    c.name = name;
    c.prefix = "s1";
    c.gravity_kind = ScenarioConfig::GravityKind::kConstant;
    c.gravity_value = kGravityCgs;
    return c;
  }
  if (name == "s2") {
    ScenarioConfig c = bfe_base();
    c.name = name;
    c.prefix = "s2";
    c.taper = true;
    c.gravity_kind = ScenarioConfig::GravityKind::kSmooth;
    c.gravity_value = kGravityCgs;
    return c;
  }
  if (name == "s3") {
    ScenarioConfig c = bfe_base();
    c.name = name;
    c.prefix = "s3";
    c.taper = true;
    c.gravity_kind = ScenarioConfig::GravityKind::kPolyline;
    c.gravity_samples = default_polyline();
    c.reference = ScenarioConfig::Reference::kSelfFine;
    return c;
  }
  throw ConfigError("unknown scenario preset: " + name);
}

std::vector<std::string> preset_names() {
  return {"burgers-steady", "s1", "s2", "s3"};
}

namespace {

using KvMap = std::map<std::string, std::string>;

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  std::size_t b = s.find_last_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

KvMap parse_sections(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  KvMap kv;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(path + ":" + std::to_string(lineno) + ": bad section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || section.empty())
      throw ConfigError(path + ":" + std::to_string(lineno) + ": key outside a section");
    kv[section + "." + key] = value;
  }
  return kv;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters");
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config: non-numeric value for " + key + ": '" + v + "'");
  }
}

int to_int(const std::string& key, const std::string& v) {
  const double d = to_double(key, v);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d)
    throw ConfigError("config: expected integer for " + key);
  return i;
}

bool to_onoff(const std::string& key, const std::string& v) {
  if (v == "on" || v == "true" || v == "1") return true;
  if (v == "off" || v == "false" || v == "0") return false;
  throw ConfigError("config: expected on/off for " + key);
}

}  // namespace

ScenarioConfig load_config(const std::string& path) {
  const KvMap kv = parse_sections(path);
  const std::filesystem::path base = std::filesystem::path(path).parent_path();

  ScenarioConfig cfg;
  bool have_preset = false;
  if (auto it = kv.find("model.scenario"); it != kv.end()) {
    cfg = preset_scenario(it->second);
    have_preset = true;
  }
  if (auto it = kv.find("model.kind"); it != kv.end()) {
    if (it->second == "burgers") {
      if (!have_preset) cfg = preset_scenario("burgers-steady");
      cfg.model_kind = ScenarioConfig::ModelKind::kBurgers;
    } else if (it->second == "bfe") {
      if (!have_preset) {
        const std::string keep = cfg.name;
        cfg = preset_scenario("s1");
        cfg.name = keep;
      }
      cfg.model_kind = ScenarioConfig::ModelKind::kBfe;
    } else {
      throw ConfigError("config: model.kind must be burgers or bfe");
    }
  } else if (!have_preset) {
    throw ConfigError("config: [model] must set kind or scenario");
  }

  auto num = [&](const char* key, double& slot) {
    if (auto it = kv.find(key); it != kv.end()) slot = to_double(key, it->second);
  };
  auto integer = [&](const char* key, int& slot) {
    if (auto it = kv.find(key); it != kv.end()) slot = to_int(key, it->second);
  };

  integer("model.order", cfg.order);
  if (auto it = kv.find("model.wb"); it != kv.end())
    cfg.well_balanced = to_onoff("model.wb", it->second);
  if (auto it = kv.find("model.reference"); it != kv.end()) {
    if (it->second == "analytic")
      cfg.reference = ScenarioConfig::Reference::kAnalytic;
    else if (it->second == "self")
      cfg.reference = ScenarioConfig::Reference::kSelfFine;
    else
      throw ConfigError("config: model.reference must be analytic or self");
  }

  // Wall data in input units.
  num("model.a0_cm2", cfg.base_a0);
  num("model.h0_cm", cfg.base_h0);
  if (auto it = kv.find("model.ee_pa"); it != kv.end())
    cfg.base_ee = kPaToCgs * to_double("model.ee_pa", it->second);
  if (auto it = kv.find("model.ec_pa"); it != kv.end())
    cfg.base_ec = kPaToCgs * to_double("model.ec_pa", it->second);
  if (auto it = kv.find("model.pr_mmhg"); it != kv.end())
    cfg.base_pr = kMmhgToCgs * to_double("model.pr_mmhg", it->second);
  if (auto it = kv.find("model.taper"); it != kv.end()) {
    if (it->second == "linear")
      cfg.taper = true;
    else if (it->second == "none")
      cfg.taper = false;
    else
      throw ConfigError("config: model.taper must be none or linear");
  }
  num("model.rho", cfg.rho);
  num("model.friction", cfg.friction);
  num("model.epsilon_s", cfg.epsilon);
  num("model.gamma", cfg.gamma);
  auto samples = [&](const char* key,
                     std::vector<std::pair<double, double>>& slot,
                     double unit) {
    if (auto it = kv.find(key); it != kv.end()) {
      slot = load_xy_csv((base / it->second).string());
      for (auto& [x, v] : slot) v *= unit;
    }
  };
  samples("model.a0_csv", cfg.a0_samples, 1.0);
  samples("model.h0_csv", cfg.h0_samples, 1.0);
  samples("model.ee_csv", cfg.ee_samples, kPaToCgs);
  samples("model.ec_csv", cfg.ec_samples, kPaToCgs);
  samples("model.pr_csv", cfg.pr_samples, kMmhgToCgs);
  const bool had_scale = kv.count("model.stiffness_scale") > 0;
  const bool had_cal = kv.count("model.calibrate_sound_speed") > 0;
  if (had_scale && had_cal)
    throw ConfigError(
        "config: stiffness_scale and calibrate_sound_speed are mutually exclusive");
  if (had_scale) {
    cfg.stiffness_scale = to_double("model.stiffness_scale",
                                    kv.at("model.stiffness_scale"));
    cfg.calibrate_sound_speed = 0.0;
  }
  if (had_cal)
    cfg.calibrate_sound_speed = to_double("model.calibrate_sound_speed",
                                          kv.at("model.calibrate_sound_speed"));

  num("grid.x_a", cfg.x_a);
  num("grid.x_b", cfg.x_b);
  integer("grid.cells", cfg.cells);

  num("time.t_final", cfg.t_final);
  num("time.cfl", cfg.cfl);
  num("time.dt_max", cfg.dt_max);

  auto bc_kind = [&](const std::string& v, const char* key) {
    if (v == "dirichlet") return BoundarySpec::Kind::kDirichlet;
    if (v == "transparent") return BoundarySpec::Kind::kTransparent;
    if (v == "noflow") return BoundarySpec::Kind::kReflective;
    if (v == "pressure") return BoundarySpec::Kind::kFixedPressure;
    throw ConfigError(std::string("config: unknown boundary kind for ") + key);
  };
  if (auto it = kv.find("bc.left"); it != kv.end())
    cfg.left.kind = bc_kind(it->second, "bc.left");
  if (auto it = kv.find("bc.right"); it != kv.end())
    cfg.right.kind = bc_kind(it->second, "bc.right");
  num("bc.left_value", cfg.left.value);
  if (auto it = kv.find("bc.right_pressure_mmhg"); it != kv.end())
    cfg.right.value = kMmhgToCgs * to_double("bc.right_pressure_mmhg", it->second);

  if (auto it = kv.find("gravity.kind"); it != kv.end()) {
    if (it->second == "constant")
      cfg.gravity_kind = ScenarioConfig::GravityKind::kConstant;
    else if (it->second == "smooth")
      cfg.gravity_kind = ScenarioConfig::GravityKind::kSmooth;
    else if (it->second == "polyline")
      cfg.gravity_kind = ScenarioConfig::GravityKind::kPolyline;
    else
      throw ConfigError("config: gravity.kind must be constant, smooth or polyline");
  }
  num("gravity.value", cfg.gravity_value);
  if (auto it = kv.find("gravity.csv"); it != kv.end()) {
    const std::filesystem::path p = base / it->second;
    cfg.gravity_samples = load_xy_csv(p.string());
  }

  if (auto it = kv.find("output.prefix"); it != kv.end()) cfg.prefix = it->second;
  if (auto it = kv.find("output.snapshots"); it != kv.end()) {
    cfg.snapshots.clear();
    std::istringstream ss(it->second);
    std::string tok;
    while (std::getline(ss, tok, ','))
      cfg.snapshots.push_back(to_double("output.snapshots", trim(tok)));
  }

  return cfg;
}

Grid build_grid(const ScenarioConfig& cfg) {
  return Grid::uniform(cfg.x_a, cfg.x_b, cfg.cells);
}

VesselProfile build_vessel(const ScenarioConfig& cfg) {
  if (cfg.model_kind != ScenarioConfig::ModelKind::kBfe)
    throw ConfigError("vessel profile requested for a non-vessel model");
  if (cfg.x_a != 0.0)
    throw ConfigError("blood-flow scenarios use x_a = 0");
  const double L = cfg.x_b - cfg.x_a;
  if (!(L > 0.0)) throw ConfigError("vessel length must be positive");
  if (!(cfg.base_a0 > 0.0 && cfg.base_h0 > 0.0 && cfg.base_ee > 0.0 &&
        cfg.base_ec > 0.0))
    throw ConfigError("wall parameters must be positive");
  if (!(cfg.epsilon > 0.0)) throw ConfigError("relaxation time must be positive");
  if (!(cfg.friction < 0.0)) throw ConfigError("friction coefficient must be negative");

  VesselProfile v;
  v.length = L;
  v.rho = cfg.rho;
  v.friction = cfg.friction;
  v.epsilon = cfg.epsilon;
  auto wall_profile = [&](const std::vector<std::pair<double, double>>& samples,
                          double base, const char* what) {
    if (!samples.empty()) {
      std::vector<double> xs, vs;
      for (const auto& [x, val] : samples) {
        xs.push_back(x);
        vs.push_back(val);
      }
      Profile p = Profile::polyline(std::move(xs), std::move(vs));
      if (!p.covers(0.0, L))
        throw ConfigError(std::string(what) + " samples must cover the vessel");
      return p;
    }
    return cfg.taper ? Profile::linear(1.1 * base, 0.9 * base, L)
                     : Profile::constant(base);
  };
  v.a0 = wall_profile(cfg.a0_samples, cfg.base_a0, "a0");
  v.h0 = wall_profile(cfg.h0_samples, cfg.base_h0, "h0");
  v.ee = wall_profile(cfg.ee_samples, cfg.base_ee, "ee");
  v.ec = wall_profile(cfg.ec_samples, cfg.base_ec, "ec");
  v.pr = wall_profile(cfg.pr_samples, cfg.base_pr, "pr");

  switch (cfg.gravity_kind) {
    case ScenarioConfig::GravityKind::kConstant:
      v.gravity = Profile::constant(cfg.gravity_value);
      break;
    case ScenarioConfig::GravityKind::kSmooth:
      v.gravity = Profile::exp_smooth(cfg.gravity_value, L);
      break;
    case ScenarioConfig::GravityKind::kPolyline: {
      if (cfg.gravity_samples.empty())
        throw ConfigError("polyline gravity requires samples (gravity.csv)");
      std::vector<double> xs, vs;
      for (const auto& [x, g] : cfg.gravity_samples) {
        xs.push_back(x);
        vs.push_back(g);
      }
      v.gravity = Profile::polyline(std::move(xs), std::move(vs));
      if (!v.gravity.covers(0.0, L))
        throw ConfigError("polyline gravity samples must cover the vessel");
      if (v.gravity.max_abs_value() > kGravityCgs * (1.0 + 1e-9))
        throw ConfigError("polyline gravity exceeds |g| = 981 cm/s^2");
      break;
    }
  }

  double scale = cfg.stiffness_scale;
  if (cfg.calibrate_sound_speed > 0.0) {
    const WallParams base{cfg.base_a0, cfg.base_h0, cfg.base_ee, cfg.base_ec};
    scale = TubeLaw::scale_for_sound_speed(cfg.calibrate_sound_speed, base,
                                           cfg.rho);
  }
  v.law = TubeLaw(scale, cfg.gamma);
  return v;
}

std::unique_ptr<SystemModel> build_model(const ScenarioConfig& cfg) {
  if (cfg.model_kind == ScenarioConfig::ModelKind::kBurgers)
    return std::make_unique<BurgersModel>();
  return std::make_unique<BfeModel>(build_vessel(cfg));
}

SolverOptions solver_options(const ScenarioConfig& cfg) {
  SolverOptions o;
  o.order = cfg.order;
  o.well_balanced = cfg.well_balanced;
  o.cfl = cfg.cfl;
  o.dt_max = cfg.dt_max;
  o.left = cfg.left;
  o.right = cfg.right;
  return o;
}

std::function<StateVec(double)> initial_condition(const ScenarioConfig& cfg,
                                                  const SystemModel& model) {
  if (cfg.model_kind == ScenarioConfig::ModelKind::kBurgers)
    return [](double x) { return StateVec::scalar(burgers_initial_condition(x)); };
  const auto* bfe = dynamic_cast<const BfeModel*>(&model);
  if (!bfe) throw ConfigError("initial_condition: model mismatch");
  const double p0 = cfg.right.kind == BoundarySpec::Kind::kFixedPressure
                        ? cfg.right.value
                        : 60.0 * kMmhgToCgs;
  return [bfe, p0](double x) { return bfe->state_at_pressure(x, p0, 0.0, 0.0); };
}

}  // namespace wbfv
