#pragma once

// One-DOF closed suspension chain: a triangle with two fixed-length sides and
// a linear actuator as the third.  The actuator position x sets the variable
// side L_x = L_c0 + x + L_c; the three passive revolute angles follow from
// the triangle and their rates/accelerations from analytic derivatives of the
// law of cosines (closed forms derived in docs/suspension_rates.md).
//
// Vertex/edge naming: the pivot joint (angle q, frame B1) joins the two fixed
// sides, L_a to the rocker attachment (frame Tc) and L_b to the cylinder
// pivot (frame B3); q1 sits at B3 between L_b and the actuator, q2 at Tc
// between L_a and the actuator.  All inner angles are negative by convention
// and satisfy q + q1 + q2 + pi = 0.
//
// The same chain is walked as two serial branches that must agree at Tc:
//   A: fb -> B1 (revolute, s_z) -> Tc            (rocker side)
//   B: fb -> B3 (revolute, s_z) -> B4 (prismatic, s_x) -> Tc (revolute, s_z)

#include <asmm/spatial.hpp>

#include <stdexcept>
#include <string>

namespace asmm {

struct TriangleDegenerate : std::domain_error {
  double lx, lo, hi;  // offending length and admissible open interval
  TriangleDegenerate(double lx_, double lo_, double hi_)
      : std::domain_error("suspension triangle degenerate: L_x = " + std::to_string(lx_) +
                          " outside (" + std::to_string(lo_) + ", " + std::to_string(hi_) + ")"),
        lx(lx_), lo(lo_), hi(hi_) {}
};

struct ChainGeometry {
  // triangle sides and actuator split
  double L_a = 0;    // B1 -> Tc (rocker side)
  double L_b = 0;    // B1 -> B3 (frame side)
  double L_c0 = 0;   // cylinder body length (B3 to piston zero)
  double L_c = 0;    // rod head length (piston to Tc)

  // assembly offsets: joint angle = inner angle + psi
  double psi = 0, psi1 = 0, psi2 = 0;

  // fixed frames of the two branches
  Transform fb_to_b1;     // pose of the B1 joint base frame in fb
  Transform fb_to_b3;     // pose of the B3 joint base frame in fb
  Transform b1_to_tc;     // rocker-side fixed offset: B1 joint frame -> Tc
  Transform b3_to_b4;     // cylinder: B3 joint frame -> prismatic base (L_c0 along x)
  Transform b4_to_tcj;    // rod: piston frame -> Tc joint base (L_c along x)
  Transform tcj_to_tc;    // fixed offset after the Tc joint closing the loop
};

struct InnerAngles {
  double q, q1, q2;
};

struct RateCoefficients {
  double k1, k2, k3;     // dq/dx, dq1/dx, dq2/dx
  double k1d, k2d, k3d;  // their time derivatives at the given xd
};

// Angular state of one chain, everything needed to pose/animate both branches.
struct ChainState {
  double x, xd, xdd;
  double lx;
  InnerAngles ang;
  RateCoefficients k;
  double theta, theta1, theta2;     // joint angles (inner + psi)
  double thetad, theta1d, theta2d;  // k_j xd
  double thetadd, theta1dd, theta2dd;  // kd_j xd + k_j xdd
};

// Twists (or spatial accelerations) of the chain frames along both branches,
// each expressed in its own frame.  tc_a and tc_b are the two independent
// routes to the same physical frame and must coincide.
struct ChainTwists {
  MotionVector b1, tc_a;         // branch A
  MotionVector b3, b4, tc_b;     // branch B
};

// Planar layout of one chain.  p1/p3 are the pivot positions in fb
// coordinates and must share their y (the suspension plane offset); the
// frames are built so every joint angle is zero at x_nom and the loop closes
// identically over the whole admissible stroke.
struct ChainParams {
  Vec3 p1;             // rocker pivot (B1)
  Vec3 p3;             // cylinder pivot (B3), same y as p1
  double L_a = 0;      // rocker length B1 -> Tc
  double L_c0 = 0;     // cylinder body length
  double L_c = 0;      // rod head length
  double x_nom = 0;    // stroke at which all three joint angles read zero
  double delta_a = 0;  // extra heading of the Tc frame relative to the rocker
};

ChainGeometry make_chain_geometry(const ChainParams& p);

double variable_side_length(const ChainGeometry& g, double x);

// Admissible open interval of x (triangle inequality with a safety margin).
void admissible_stroke(const ChainGeometry& g, double margin, double* x_lo, double* x_hi);

InnerAngles inner_angles(const ChainGeometry& g, double x);
RateCoefficients rate_coefficients(const ChainGeometry& g, double x, double xd);

ChainState chain_state(const ChainGeometry& g, double x, double xd, double xdd);

// Poses of the chain frames in fb coordinates at the given state.
struct ChainPoses {
  Transform b1, tc_a;        // branch A: post-joint B1 frame, Tc frame
  Transform b3, b4, tc_b;    // branch B: post-joint frames and closed Tc
};
ChainPoses chain_poses(const ChainGeometry& g, const ChainState& s);

// Twist recursion along both branches given the base twist (in fb coords).
ChainTwists chain_twists(const ChainGeometry& g, const ChainState& s,
                         const MotionVector& v_fb);

// Spatial-acceleration recursion; a_fb is the base spatial acceleration in fb
// coordinates (gravity enters here via the root-acceleration convention).
ChainTwists chain_accels(const ChainGeometry& g, const ChainState& s,
                         const MotionVector& v_fb, const MotionVector& a_fb);

}  // namespace asmm
