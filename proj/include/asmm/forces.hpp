#pragma once

// Quasi-static wheel normal forces.  The machine's inertial and gravity load
// is collected at a yaw-aligned frame sitting on the whole-machine CoM; the
// vertical contact forces then balance its vertical-force, roll and pitch
// components.  Three equations over four wheels leaves one redundancy,
// resolved minimum-norm (which splits left/right pairs evenly on symmetric
// stances).

#include <asmm/dynamics.hpp>
#include <asmm/platform.hpp>

#include <array>

namespace asmm {

struct ForceInputs {
  Transform com_frame_w;            // CoM frame: yaw-aligned, origin at the machine CoM
  MotionVector v_cm, a_cm;          // base-rigid twist/accel of that frame
  SpatialInertia m_platform;        // platform-only aggregate at the CoM frame
  ForceVector f_manip;              // manipulator load wrench at the CoM frame
  std::array<Vec3, 4> contact_r{};  // contact points in CoM-frame coordinates
  double mass = 0;                  // whole-machine mass
  Vec3 r_cm_c = Vec3::Zero();       // CoM in support-centre coordinates
};

// Collect the solver inputs from an evaluated platform.  The kinematics must
// have been computed with the gravity root acceleration for weight to show up.
ForceInputs force_inputs(const PlatformModel& pm, const PlatformKinematics& pk);

struct NormalForces {
  Eigen::Vector4d f = Eigen::Vector4d::Zero();  // FR FL RR RL
  bool liftoff = false;  // some wheel would need to pull down; forces reported unclamped
  ForceVector load;      // wrench the contacts are balancing, at the CoM frame
};

NormalForces normal_forces(const ForceInputs& in);

// Whole-machine inertia frozen at a reference posture, rigid to the base.
// Feeding it through the same solver quantifies what ignoring the moving
// manipulator and suspension mass distribution costs.
struct FrozenInertia {
  double mass = 0;
  Vec3 r_cm_fb = Vec3::Zero();  // CoM in fb coordinates at the reference
  SpatialInertia m_at_cm;       // whole-machine aggregate at the frozen CoM frame
};

FrozenInertia freeze_inertia(const PlatformModel& pm, const PlatformState& reference);

ForceInputs force_inputs_frozen(const PlatformModel& pm, const FrozenInertia& fz,
                                const PlatformKinematics& pk);

}  // namespace asmm
