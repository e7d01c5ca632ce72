#pragma once

// JSON configuration surface: the full platform model (frames, parents,
// screw axes, offsets, inertias, role bindings, suspension geometry) and
// simulation scenarios (command generators, suspension mode, hydraulic and
// optimizer knobs, output paths).  Schemas are documented in the README.

#include <asmm/hydraulics.hpp>
#include <asmm/optimizer.hpp>
#include <asmm/platform.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace asmm {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Platform model <-> JSON

nlohmann::json platform_json(const PlatformModel& pm);

// Rebuilds the model, validating structure as it goes: parents must precede
// children, screws must be unit, inertias symmetric positive definite,
// rotations orthonormal.  Throws ConfigError naming the offending entry.
PlatformModel platform_from_json(const nlohmann::json& j);

PlatformModel load_platform(const std::string& path);
void save_platform(const PlatformModel& pm, const std::string& path);

// ---------------------------------------------------------------------------
// Scenario

enum class SuspensionMode { Fixed, Scripted, Optimized };

const char* to_string(SuspensionMode m);

struct ArmCommand {
  Eigen::Matrix<double, 7, 1> alpha = Eigen::Matrix<double, 7, 1>::Zero();
  Eigen::Matrix<double, 7, 1> beta = Eigen::Matrix<double, 7, 1>::Zero();
  double omega = 1.0;  // rad/s of the shared sinusoid
};

struct ScriptedSuspension {
  Eigen::Vector2d x_alpha = Eigen::Vector2d::Zero();
  Eigen::Vector2d x_beta = Eigen::Vector2d::Zero();
  double f_s = 0.3;  // rad/s
};

struct HydraulicsConfig {
  bool enabled = false;
  ActuatorPlant plant;                // params default to default_hydraulics()
  double tracking_threshold = 0.01;   // steady-state |x_ref - x| budget, m
};

struct OptimizerConfig {
  OptWeights weights;
  SmoothBoundParams rate;
  double kkt_tol = 1e-6;
  int max_iter = 40;
  bool symmetric = true;  // one shared stroke command for both sides

  // Receding-horizon preview: each control step solves for the best stroke
  // reachable plan_horizon seconds ahead (commands evaluated there too) and
  // executes the first dt slice of that plan.  At millisecond dt the
  // one-step window is micrometers wide and the cost change across it is
  // dominated by the stroke acceleration's inertial coupling, not by
  // posture; a fraction-of-a-second horizon makes posture the deciding
  // term again.  Values <= dt fall back to single-step solves.
  double plan_horizon = 0.2;  // s
};

struct Scenario {
  std::string name = "scenario";
  std::string model_path;  // resolved relative to the scenario file's directory
  double duration = 1.0;
  double dt = 1e-3;

  ArmCommand arm;
  Eigen::Vector4d wheel_rates = Eigen::Vector4d::Zero();

  SuspensionMode mode = SuspensionMode::Fixed;
  std::optional<Eigen::Vector2d> x_fixed;  // fixed-mode hold; defaults to x_nom
  ScriptedSuspension scripted;
  OptimizerConfig optimizer;
  HydraulicsConfig hydraulics;

  std::string csv_path;      // empty = no CSV
  std::string summary_path;  // empty = no summary file
  unsigned seed = 0;
};

// Loads and validates; relative model/output paths are resolved against the
// scenario file's directory.
Scenario load_scenario(const std::string& path);

Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_json(const Scenario& sc);

}  // namespace asmm
