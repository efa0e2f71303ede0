#ifndef WBFV_CONFIG_HPP
#define WBFV_CONFIG_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "wbfv/grid.hpp"
#include "wbfv/model.hpp"
#include "wbfv/profiles.hpp"
#include "wbfv/solver.hpp"

namespace wbfv {

// Fully resolved scenario description. Values are CGS internally; config
// files accept Pa for wall moduli and mmHg for pressures.
struct ScenarioConfig {
  std::string name = "custom";

  enum class ModelKind { kBurgers, kBfe };
  ModelKind model_kind = ModelKind::kBurgers;
  int order = 2;
  bool well_balanced = true;

  double x_a = -1.0;
  double x_b = 1.0;
  int cells = 50;

  double t_final = 40.0;
  double cfl = 0.9;
  double dt_max = 1.0;

  BoundarySpec left;
  BoundarySpec right;

  // Blood-flow wall data (base values, CGS).
  double base_a0 = 0.24;
  double base_h0 = 0.05;
  double base_ee = 3.6e6 * 10.0;
  double base_ec = 9.0e8 * 10.0;
  double base_pr = 0.0;
  bool taper = false;  // linear 1.1x -> 0.9x of base along the vessel
  // Optional sampled wall profiles; override the constant/taper choice.
  std::vector<std::pair<double, double>> a0_samples;
  std::vector<std::pair<double, double>> h0_samples;
  std::vector<std::pair<double, double>> ee_samples;   // Pa
  std::vector<std::pair<double, double>> ec_samples;   // Pa
  std::vector<std::pair<double, double>> pr_samples;   // mmHg
  double rho = 1.05;
  double friction = -8.0 * 3.14159265358979323846 * 0.04 / 1.05;
  double epsilon = 1e-4;
  double gamma = 0.0;
  double stiffness_scale = 1.0;
  double calibrate_sound_speed = 0.0;  // 0 = use stiffness_scale as given

  enum class GravityKind { kConstant, kSmooth, kPolyline };
  GravityKind gravity_kind = GravityKind::kConstant;
  double gravity_value = kGravityCgs;  // constant value or |g| for smooth
  std::vector<std::pair<double, double>> gravity_samples;

  enum class Reference { kAnalytic, kSelfFine };
  Reference reference = Reference::kAnalytic;

  std::string prefix = "run";
  std::vector<double> snapshots;
  int threads = 1;
};

// Built-in scenarios: "burgers-steady", "s1", "s2", "s3".
ScenarioConfig preset_scenario(const std::string& name);
std::vector<std::string> preset_names();

// Sectioned key = value file; [model] scenario=<preset> seeds the defaults.
// Relative file paths resolve against the config file location.
ScenarioConfig load_config(const std::string& path);

// Assembled pieces.
Grid build_grid(const ScenarioConfig& cfg);
VesselProfile build_vessel(const ScenarioConfig& cfg);
std::unique_ptr<SystemModel> build_model(const ScenarioConfig& cfg);
SolverOptions solver_options(const ScenarioConfig& cfg);
std::function<StateVec(double)> initial_condition(const ScenarioConfig& cfg,
                                                  const SystemModel& model);

}  // namespace wbfv

#endif
