#pragma once

// Scenario runner: scripted command generation, fixed-step closed-loop
// simulation (stability optimizer -> hydraulic tracking -> mechanics),
// per-step CSV telemetry, RMS summary metrics, and a microbenchmark harness.

#include <asmm/config.hpp>
#include <asmm/forces.hpp>

#include <string>
#include <vector>

namespace asmm {

struct Commands {
  Eigen::Matrix<double, 7, 1> q_arm, qd_arm, qdd_arm;
  Eigen::Vector4d qd_wheel;
  Eigen::Vector2d x, xd, xdd;  // scripted stroke triple (scripted mode only)
};

// Sinusoid commands with analytic derivatives at time t.
Commands command_generators(const Scenario& sc, double t);

// Sum of |f_i - f_j| over the six unordered wheel pairs.
double force_distribution_metric(const Eigen::Vector4d& f);

// Level the base onto the ground plane: adjusts height, pitch and roll so
// the four wheel contacts sit on z = 0 (least squares when the stroke split
// makes the four contacts incompatible).  x/y/yaw are preserved.
void ground_base(const PlatformModel& pm, PlatformState& ps);

// Quasi-static load each linear actuator carries (positive = compression),
// from the virtual work of the contact forces and the chain bodies' weight
// through the stroke coordinate.
Eigen::Vector2d actuator_loads(const PlatformModel& pm, const PlatformState& ps,
                               const Eigen::Vector4d& f_normal);

struct RunSummary {
  std::string scenario, mode;
  bool hydraulics = false;
  int steps = 0;
  double duration = 0, dt = 0;
  double rms_force_metric = 0;
  double rms_com_x = 0;
  double max_tracking_err = 0;        // worst |x_ref - x| anywhere
  double steady_tracking_err = 0;     // worst over the final half
  bool tracking_ok = true;            // steady error within the scenario budget
  int liftoff_steps = 0;
  long optimizer_calls = 0;
  long optimizer_infeasible = 0;
  long optimizer_relaxed = 0;  // steps solved with wheel-load positivity relaxed
  int optimizer_max_iterations = 0;
  double optimizer_mean_iterations = 0;
  long command_saturation_steps = 0;
  long pressure_clamp_steps = 0;
  double wall_time_s = 0;
  std::string csv_path, summary_path;
};

nlohmann::json summary_json(const RunSummary& rs);

// Runs the closed loop, writing CSV telemetry and a JSON summary to the
// scenario's output paths (when set).  Errors abort with the offending
// simulation timestamp in the message.
RunSummary run_scenario(const Scenario& sc, const PlatformModel& pm);

struct BenchRow {
  std::string name;
  long calls = 0;
  double mean_us = 0;
  double std_us = 0;    // across timing batches
  double ref_us = 0;    // reference timing the row is reported against
};

// Times the core pipeline stages, `calls` executions each.
std::vector<BenchRow> benchmark_model(const PlatformModel& pm, long calls);

}  // namespace asmm
