#pragma once

// Recursive kinematics over a Model: world poses, body-frame twists and
// spatial accelerations, per-body wrenches and their accumulation at a frame.
//
// Twists/accelerations are expressed in each frame's own coordinates.  The
// recursions are
//   v_i    = Ad(X_i<-p) v_p + s_i qd_i
//   vdot_i = Ad(X_i<-p) vdot_p + s_i qdd_i + ad(v_i) s_i qd_i
// Gravity is injected through the root spatial acceleration: a machine at
// rest in a g field uses root_accel = [0 0 +g, 0 0 0] (the support
// acceleration), which makes static wrenches come out as the loads the
// structure must carry.

#include <asmm/model.hpp>

#include <vector>

namespace asmm {

constexpr double kGravity = 9.81;

// Support acceleration for gravity g along world -z.
inline MotionVector gravity_root_accel(double g = kGravity) {
  return {Vec3(0, 0, g), Vec3::Zero()};
}

// Scratch buffers for one full kinematic sweep; reuse across calls to stay
// allocation-free in hot loops.
struct KinematicsCache {
  std::vector<Transform> pose_world;    // pose of frame i in world
  std::vector<Transform> child_to_parent;  // pose of frame i in its parent (at q)
  std::vector<MotionVector> twist;      // local twists
  std::vector<MotionVector> accel;      // local spatial accelerations
};

// Forward pass: poses only.
void compute_poses(const Model& model, const Eigen::VectorXd& q, KinematicsCache& cache);

// Full pass: poses, twists and accelerations (root acceleration as given).
void compute_kinematics(const Model& model, const JointState& js,
                        const MotionVector& root_accel, KinematicsCache& cache);

// Convenience wrappers.
std::vector<Transform> forward_kinematics(const Model& model, const Eigen::VectorXd& q);
std::vector<MotionVector> propagate_twist(const Model& model, const JointState& js);
std::vector<MotionVector> propagate_accel(const Model& model, const JointState& js,
                                          const MotionVector& root_accel);

// Wrench of body b (expressed in its frame) given a computed cache.
ForceVector body_wrench_of(const Model& model, const Body& b, const KinematicsCache& cache);

// Sum of the wrenches of the selected bodies, expressed at `target_world`
// (a pose in world coordinates).  An empty selection means every body.
ForceVector total_wrench_at(const Model& model, const KinematicsCache& cache,
                            const Transform& target_world,
                            const std::vector<int>& body_ids = {});

// Joint torques/forces of a serial chain by a backward sweep: for each joint
// frame in `joint_frames`, the projection of the accumulated subtree wrench
// onto the joint screw.  Frames outside the listed chain contribute their
// wrenches to the nearest listed ancestor.
Eigen::VectorXd chain_joint_efforts(const Model& model, const KinematicsCache& cache,
                                    const std::vector<FrameId>& joint_frames);

}  // namespace asmm
