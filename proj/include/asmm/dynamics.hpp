#pragma once

// Aggregate mass properties of a set of bodies, folded to a query frame.

#include <asmm/kinematics.hpp>
#include <asmm/model.hpp>

#include <vector>

namespace asmm {

struct AggregateInertia {
  SpatialInertia at_frame;          // full 6x6 aggregate at the query frame
  double mass = 0;
  Vec3 com = Vec3::Zero();          // CoM in query-frame coordinates
  Mat3 inertia_com = Mat3::Zero();  // rotational inertia about the CoM
};

// Sum the bodies' spatial inertias expressed at target_w (world pose of the
// query frame).  An empty id list folds every body in the model.
AggregateInertia aggregate_inertia(const Model& m, const KinematicsCache& kin,
                                   const Transform& target_w,
                                   const std::vector<int>& body_ids = {});

}  // namespace asmm
