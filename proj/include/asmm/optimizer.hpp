#pragma once

// Per-step suspension optimizer.  The decision variables are the next
// actuator position, velocity and acceleration; backward-Euler consistency
// ties the three together, so after elimination a step is a box-constrained
// minimization in the next position alone (one scalar when both sides are
// commanded together, two otherwise).  The cost trades force-distribution
// imbalance against inverse tipover margins.

#include <asmm/forces.hpp>
#include <asmm/platform.hpp>

#include <array>
#include <stdexcept>
#include <string>

namespace asmm {

// Tipover margin shrank to zero: the CoM ground projection reached edge
// `edge` of the support polygon (signed inside-distance `s` ≤ 0).
struct NonPositiveAngle : std::runtime_error {
  int edge;
  double s;
  NonPositiveAngle(int edge_, double s_)
      : std::runtime_error("CoM projection reached support-polygon edge " +
                           std::to_string(edge_)),
        edge(edge_),
        s(s_) {}
};

// Support polygon edge order; edge k joins vertex k to vertex k+1 (mod 4) of
// the contact ring FR -> FL -> RL -> RR (counterclockwise seen from above).
enum EdgeIndex { kEdgeFront = 0, kEdgeLeft, kEdgeRear, kEdgeRight };

// Tipover angle about each support edge: atan2(inside distance of the CoM
// ground projection to the edge, CoM height over the contact plane).
// Positive inside, shrinking to zero at the edge.  Inputs are in the
// support-centre frame; vertices in the contact ring order above.
// Throws NonPositiveAngle when the projection reaches or crosses an edge.
std::array<double, 4> stability_angles(const Vec3& r_cm_c,
                                       const std::array<Vec3, 4>& ring);

// Convenience: build the contact ring from solved force inputs.
std::array<Vec3, 4> support_ring(const ForceInputs& in);

// Arctan-pinched velocity/acceleration envelopes.  Caps apply mid-stroke;
// both shrink smoothly to zero at the position limits so a commanded stop
// never demands infinite braking.
struct SmoothBoundParams {
  double v_cap = 0.4;   // m/s
  double a_cap = 2.0;   // m/s^2
  double gamma = 40.0;  // 1/m, pinch sharpness near the stroke ends
};

struct RateBounds {
  double xd_min, xd_max;
  double xdd_min, xdd_max;
};

RateBounds smooth_bounds(double x, double x_min, double x_max,
                         const SmoothBoundParams& par);

// Cost weights.  Pair weights are symmetric with zero diagonal; the default
// penalizes front/rear imbalance at 1 and same-axle imbalance at 1e-3.
// Edge weights default to 100 on the front/rear margins, 10 on the sides.
struct OptWeights {
  double pair[4][4];
  std::array<double, 4> edge;
  OptWeights();
};

struct CostTerms {
  double force_term = 0;  // (1/2) sum_{i != j} psi_ij (f_i - f_j)^2
  double angle_term = 0;  // sum_k psi_k / eta_k
  double total() const { return force_term + angle_term; }
};

CostTerms cost_terms(const Eigen::Vector4d& f, const std::array<double, 4>& eta,
                     const OptWeights& w);

// One optimization snapshot: everything the pipeline needs at t_{k+1} except
// the suspension coordinates being decided.
struct OptProblem {
  const PlatformModel* pm = nullptr;
  PlatformState snapshot;  // x/xd/xdd fields are overwritten per candidate

  Eigen::Vector2d x_k, xd_k;  // current actuator state [right, left]
  double dt = 1e-3;
  double x_min = 0, x_max = 0;
  SmoothBoundParams rate;
  OptWeights weights;
  bool symmetric = false;  // command both actuators with one variable

  double fd_step = 1e-6;   // m, central-difference stencil
  double kkt_tol = 1e-6;   // normalized stationarity threshold
  int max_iter = 40;

  // Admit candidates that unload wheels: the force-spread term is scored on
  // the signed forces instead of rejecting the candidate outright.  Geometric
  // tip-over (CoM projection leaving the polygon) stays a hard reject.  Off by
  // default; meant as a fallback when inertial load makes every stroke in the
  // rate window unload some wheel and the caller still wants the least-bad
  // actuation instead of a hold.
  bool relax_positivity = false;
};

struct CostBreakdown {
  double cost = 0;  // +inf when a hard constraint is violated
  CostTerms terms;
  Eigen::Vector4d f = Eigen::Vector4d::Zero();
  std::array<double, 4> eta{};
  bool force_violation = false;  // some normal force negative
  bool angle_violation = false;  // CoM projection outside the polygon
};

// Full pipeline at candidate next positions z (velocity and acceleration
// follow from backward-Euler elimination against x_k, xd_k).
CostBreakdown evaluate_cost(const OptProblem& prob, const Eigen::Vector2d& z);

enum class OptStatus { Converged, MaxIterations, Infeasible };

const char* to_string(OptStatus s);

struct OptSolution {
  Eigen::Vector2d x = Eigen::Vector2d::Zero();
  Eigen::Vector2d xd = Eigen::Vector2d::Zero();
  Eigen::Vector2d xdd = Eigen::Vector2d::Zero();
  CostBreakdown at_solution;
  double kkt_residual = 0;          // normalized projected-gradient norm
  double consistency_residual = 0;  // max backward-Euler defect, exact 0 by construction
  OptStatus status = OptStatus::Converged;
  std::string violated;  // most-violated constraint when Infeasible
  int iterations = 0;
};

OptSolution solve_step(const OptProblem& prob);

}  // namespace asmm
