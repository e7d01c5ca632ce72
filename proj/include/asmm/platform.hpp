#pragma once

// Full machine assembly: a floating base carrying two one-DOF bogie
// suspensions (front/rear wheel pairs on a rocker driven by a linear
// actuator), four driven wheels, and a seven-joint manipulator.
//
// The floating base is modelled as six scripted joints (prismatic x/y/z then
// revolute z/y/x), so base motion flows through the same recursions as every
// other joint.  Each suspension loop appears twice in the tree -- branch A
// through the rocker, branch B through the actuator -- and `assemble` keeps
// the two branches consistent by deriving the passive angles from the stroke.

#include <asmm/kinematics.hpp>
#include <asmm/model.hpp>
#include <asmm/suspension.hpp>

#include <array>
#include <vector>

namespace asmm {

// wheel ordering used everywhere: front right, front left, rear right, rear left
enum WheelIndex { kFrontRight = 0, kFrontLeft = 1, kRearRight = 2, kRearLeft = 3 };

struct SideChain {
  ChainGeometry geom;
  FrameId b1 = kNoFrame, tc_a = kNoFrame;                    // branch A
  FrameId b3 = kNoFrame, b4 = kNoFrame, tcj = kNoFrame, tc_b = kNoFrame;  // branch B
  FrameId wheel_front = kNoFrame, wheel_rear = kNoFrame;     // spin joints on the rocker
};

struct PlatformModel {
  Model model;
  FrameId fb = kNoFrame;      // floating-base frame (after all six base joints)
  FrameId mount = kNoFrame;   // manipulator mount
  FrameId tcp = kNoFrame;
  std::array<FrameId, 6> base_joints{};   // px py pz rz ry rx
  std::array<FrameId, 7> arm_joints{};
  std::array<FrameId, 4> wheel_joints{};  // WheelIndex order
  SideChain right, left;
  std::vector<int> platform_bodies;  // chassis, bogies, actuators, wheels
  std::vector<int> arm_bodies;
  double wheel_radius = 0;
  double track_half = 0;   // |y| of the suspension planes
  double x_nom = 0;        // stroke with all passive angles zeroed
  double x_min = 0, x_max = 0;  // hardware stroke limits
};

struct PlatformState {
  Vec6 base_pose = Vec6::Zero();  // x y z yaw pitch roll
  Vec6 base_vel = Vec6::Zero();   // time derivatives of those coordinates
  Vec6 base_acc = Vec6::Zero();
  Eigen::Matrix<double, 7, 1> q_arm = Eigen::Matrix<double, 7, 1>::Zero();
  Eigen::Matrix<double, 7, 1> qd_arm = Eigen::Matrix<double, 7, 1>::Zero();
  Eigen::Matrix<double, 7, 1> qdd_arm = Eigen::Matrix<double, 7, 1>::Zero();
  Eigen::Vector4d q_wheel = Eigen::Vector4d::Zero();
  Eigen::Vector4d qd_wheel = Eigen::Vector4d::Zero();
  Eigen::Vector4d qdd_wheel = Eigen::Vector4d::Zero();
  Eigen::Vector2d x = Eigen::Vector2d::Zero();  // actuator strokes [right, left]
  Eigen::Vector2d xd = Eigen::Vector2d::Zero();
  Eigen::Vector2d xdd = Eigen::Vector2d::Zero();
};

// The bundled reference machine (also what `genmodel` writes out).
PlatformModel build_reference_platform();

// Parked at the nominal stroke with wheel contacts on the ground plane.
PlatformState nominal_state(const PlatformModel& pm);

// Map a platform state onto the joint vector, deriving the passive suspension
// angles from the strokes.  Optionally reports the per-side chain states.
JointState assemble(const PlatformModel& pm, const PlatformState& ps,
                    ChainState* right_out = nullptr, ChainState* left_out = nullptr);

struct PlatformKinematics {
  JointState js;
  KinematicsCache kin;
  ChainState right_chain{}, left_chain{};
  Transform fb_w;       // floating base in world
  Transform chassis_w;  // support-centre frame: mean contact point, yaw-aligned
  double yaw = 0;
  std::array<Vec3, 4> wheel_center_w{};
  std::array<Vec3, 4> contact_w{};
};

void compute_platform(const PlatformModel& pm, const PlatformState& ps,
                      const MotionVector& root_accel, PlatformKinematics& out);

}  // namespace asmm
