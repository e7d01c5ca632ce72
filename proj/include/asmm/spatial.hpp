#pragma once

// Spatial (screw) algebra on SE(3): rigid transforms, twists, wrenches,
// spatial inertias and the operators that move them between frames.
//
// Conventions used across the library:
//   * 6-vectors pack [linear; angular].  A unit translation screw along x is
//     [1 0 0 0 0 0], a unit rotation screw about z is [0 0 0 0 0 1].
//   * Transform T_ab maps coordinates of frame b into frame a (x_a = R x_b + p,
//     "pose of b expressed in a").  adjoint(T) carries twists b -> a and
//     coadjoint(T) carries wrenches b -> a, i.e. both act in the direction
//     of the transform itself.
//   * Wrench/twist duality: <F, v> = force.linear + moment.angular (power).

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace asmm {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

inline Mat3 skew(const Vec3& v) {
  Mat3 s;
  s <<     0, -v.z(),  v.y(),
       v.z(),      0, -v.x(),
      -v.y(),  v.x(),      0;
  return s;
}

// ---------------------------------------------------------------------------
// Rigid transform

struct Transform {
  Mat3 R = Mat3::Identity();
  Vec3 p = Vec3::Zero();

  static Transform identity() { return {}; }

  Transform() = default;
  Transform(const Mat3& rot, const Vec3& pos) : R(rot), p(pos) {}

  Vec3 apply(const Vec3& x) const { return R * x + p; }

  Transform inverse() const { return {R.transpose(), -(R.transpose() * p)}; }

  friend Transform operator*(const Transform& a, const Transform& b) {
    return {a.R * b.R, a.R * b.p + a.p};
  }
};

// ---------------------------------------------------------------------------
// Twists and wrenches

struct MotionVector {
  Vec3 linear = Vec3::Zero();
  Vec3 angular = Vec3::Zero();

  MotionVector() = default;
  MotionVector(const Vec3& lin, const Vec3& ang) : linear(lin), angular(ang) {}

  static MotionVector zero() { return {}; }
  static MotionVector from_vec6(const Vec6& v) {
    return {v.head<3>(), v.tail<3>()};
  }
  Vec6 to_vec6() const {
    Vec6 v;
    v << linear, angular;
    return v;
  }

  MotionVector operator+(const MotionVector& o) const {
    return {linear + o.linear, angular + o.angular};
  }
  MotionVector operator-(const MotionVector& o) const {
    return {linear - o.linear, angular - o.angular};
  }
  MotionVector operator*(double s) const { return {linear * s, angular * s}; }
};

struct ForceVector {
  Vec3 force = Vec3::Zero();
  Vec3 moment = Vec3::Zero();

  ForceVector() = default;
  ForceVector(const Vec3& f, const Vec3& m) : force(f), moment(m) {}

  static ForceVector zero() { return {}; }
  static ForceVector from_vec6(const Vec6& v) {
    return {v.head<3>(), v.tail<3>()};
  }
  Vec6 to_vec6() const {
    Vec6 v;
    v << force, moment;
    return v;
  }

  ForceVector operator+(const ForceVector& o) const {
    return {force + o.force, moment + o.moment};
  }
  ForceVector operator-(const ForceVector& o) const {
    return {force - o.force, moment - o.moment};
  }
  ForceVector operator*(double s) const { return {force * s, moment * s}; }
};

// Power pairing <F, v>.
inline double pairing(const ForceVector& f, const MotionVector& v) {
  return f.force.dot(v.linear) + f.moment.dot(v.angular);
}

// ---------------------------------------------------------------------------
// Exponential map

// exp([s] q) for a unit screw s.  Unit means |angular| == 1 (revolute-like,
// pitch allowed through the linear part) or angular == 0 with |linear| == 1
// (prismatic).  Anything else is rejected: joint axes are normalized data.
inline Transform exp_screw(const Vec6& s, double q) {
  const Vec3 v = s.head<3>();
  const Vec3 w = s.tail<3>();
  const double wn = w.norm();

  constexpr double kUnitTol = 1e-9;
  if (std::abs(wn - 1.0) > kUnitTol) {
    if (wn > kUnitTol) {
      throw std::invalid_argument("exp_screw: screw axis not unit (|angular| must be 1 or 0)");
    }
    if (std::abs(v.norm() - 1.0) > kUnitTol) {
      throw std::invalid_argument("exp_screw: prismatic screw must have unit linear part");
    }
    return {Mat3::Identity(), v * q};  // pure translation
  }

  const Mat3 W = skew(w);
  double c1, c2, c3;  // sin q, 1-cos q, q-sin q
  if (std::abs(q) < 1e-6) {
    // series to avoid cancellation near zero; good to ~1e-19 here
    const double q2 = q * q;
    c1 = q * (1.0 - q2 / 6.0);
    c2 = q2 * 0.5 * (1.0 - q2 / 12.0);
    c3 = q * q2 / 6.0 * (1.0 - q2 / 20.0);
  } else {
    c1 = std::sin(q);
    c2 = 1.0 - std::cos(q);
    c3 = q - c1;
  }

  Transform t;
  t.R = Mat3::Identity() + c1 * W + c2 * (W * W);
  t.p = (Mat3::Identity() * q + c2 * W + c3 * (W * W)) * v;
  return t;
}

// ---------------------------------------------------------------------------
// Adjoint maps

// Twist carrier: v_a = adjoint(T_ab) v_b.
inline Mat6 adjoint(const Transform& t) {
  Mat6 ad = Mat6::Zero();
  ad.topLeftCorner<3, 3>() = t.R;
  ad.topRightCorner<3, 3>() = skew(t.p) * t.R;
  ad.bottomRightCorner<3, 3>() = t.R;
  return ad;
}

// Wrench carrier: F_a = coadjoint(T_ab) F_b.  Numerically equal to
// adjoint(inverse(T))^T; kept closed-form for speed.
inline Mat6 coadjoint(const Transform& t) {
  Mat6 ad = Mat6::Zero();
  ad.topLeftCorner<3, 3>() = t.R;
  ad.bottomLeftCorner<3, 3>() = skew(t.p) * t.R;
  ad.bottomRightCorner<3, 3>() = t.R;
  return ad;
}

inline MotionVector transform_twist(const Transform& t, const MotionVector& v) {
  const Vec3 ang = t.R * v.angular;
  return {t.R * v.linear + t.p.cross(ang), ang};
}

// T is the pose of F's current frame expressed in the destination frame.
inline ForceVector transform_wrench(const Transform& t, const ForceVector& f) {
  const Vec3 force = t.R * f.force;
  return {force, t.R * f.moment + t.p.cross(force)};
}

// ---------------------------------------------------------------------------
// Lie brackets

// ad_a b = [w_a x v_b + v_a x w_b, w_a x w_b]
inline MotionVector lie_bracket(const MotionVector& a, const MotionVector& b) {
  return {a.angular.cross(b.linear) + a.linear.cross(b.angular),
          a.angular.cross(b.angular)};
}

// Dual map on wrenches, defined by <dual_bracket(v, F), w> = <F, lie_bracket(v, w)>.
// With this sign, M vdot - dual_bracket(v, M v) reproduces the Euler equation
// (gyroscopic moment +w x Iw); see body_wrench below.
inline ForceVector dual_bracket(const MotionVector& v, const ForceVector& f) {
  return {f.force.cross(v.angular),
          f.force.cross(v.linear) + f.moment.cross(v.angular)};
}

// ---------------------------------------------------------------------------
// Spatial inertia

// 6x6 inertia of a rigid body about some frame:
//   [ m I      -m [r] ]
//   [ m [r]  I_cm - m [r]^2 ]
// with r the CoM expressed in that frame and I_cm the rotational inertia
// about the CoM.  The lower-right block is the tensor about the frame origin
// (parallel-axis shift of I_cm).
struct SpatialInertia {
  Mat6 m = Mat6::Zero();

  static SpatialInertia zero() { return {}; }

  static SpatialInertia from_matrix(const Mat6& full) { return {full}; }

  static SpatialInertia from_mass_com_inertia(double mass, const Vec3& com,
                                              const Mat3& inertia_about_com) {
    if (!(mass > 0.0)) {
      throw std::invalid_argument("SpatialInertia: mass must be positive");
    }
    const Mat3 rx = skew(com);
    SpatialInertia si;
    si.m.topLeftCorner<3, 3>() = mass * Mat3::Identity();
    si.m.topRightCorner<3, 3>() = -mass * rx;
    si.m.bottomLeftCorner<3, 3>() = mass * rx;
    si.m.bottomRightCorner<3, 3>() = inertia_about_com - mass * rx * rx;
    return si;
  }

  double mass() const { return m(0, 0); }

  // Inverse of the construction above: the lower-left block is m [r].
  Vec3 com() const {
    const double mm = mass();
    return Vec3(m(5, 1), m(3, 2), m(4, 0)) / mm;
  }

  Mat3 inertia_about_com() const {
    const Mat3 rx = skew(com());
    return m.bottomRightCorner<3, 3>() + mass() * rx * rx;
  }

  ForceVector apply(const MotionVector& v) const {
    return ForceVector::from_vec6(m * v.to_vec6());
  }

  SpatialInertia operator+(const SpatialInertia& o) const { return {m + o.m}; }
};

// Re-express a spatial inertia in another frame.  T is the pose of the
// destination frame in M's current frame, so a point mass sitting at the
// current origin shows up at -T.p after moving the frame by T.p (the body
// stays put, the observer moves).
inline SpatialInertia transform_inertia(const SpatialInertia& si, const Transform& t) {
  const Mat6 ad = adjoint(t);
  return {ad.transpose() * si.m * ad};
}

// Wrench a rigid body exerts when moving with twist v and spatial
// acceleration a (both in the body frame the inertia is expressed in):
//   F = M a - dual_bracket(v, M v)
// Gravity enters through the root acceleration convention, not here.
inline ForceVector body_wrench(const SpatialInertia& m, const MotionVector& v,
                               const MotionVector& a) {
  return ForceVector::from_vec6(m.m * a.to_vec6()) - dual_bracket(v, m.apply(v));
}

}  // namespace asmm
