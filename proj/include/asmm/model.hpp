#pragma once

// Declarative rigid-body tree: named frames connected by fixed offsets and
// single-DOF screw joints, with spatial inertias attached to frames.
//
// Frames are stored parent-before-child, so every recursive sweep is a single
// forward (or backward) pass over the frame array.  Closed kinematic loops
// are not represented here; the suspension module drives the loop's passive
// joints to coordinated values so the tree stays consistent.

#include <asmm/spatial.hpp>

#include <Eigen/Dense>

#include <string>
#include <unordered_map>
#include <vector>

namespace asmm {

enum class JointKind { Fixed, Revolute, Prismatic };

using FrameId = int;
constexpr FrameId kNoFrame = -1;

struct Frame {
  std::string name;
  FrameId parent = kNoFrame;
  Transform offset;            // pose of the joint's zero configuration in the parent
  JointKind kind = JointKind::Fixed;
  Vec6 screw = Vec6::Zero();   // unit joint screw in the local (post-offset) frame
  int q_index = -1;            // slot in the joint vector, -1 for fixed frames
};

struct Body {
  std::string name;
  FrameId frame = kNoFrame;
  SpatialInertia inertia;
};

struct JointState {
  Eigen::VectorXd q, qd, qdd;

  static JointState zeros(int n) {
    JointState s;
    s.q = Eigen::VectorXd::Zero(n);
    s.qd = Eigen::VectorXd::Zero(n);
    s.qdd = Eigen::VectorXd::Zero(n);
    return s;
  }
};

class Model {
 public:
  FrameId add_frame(const std::string& name, FrameId parent, const Transform& offset) {
    return add(name, parent, offset, JointKind::Fixed, Vec6::Zero());
  }

  FrameId add_joint(const std::string& name, FrameId parent, const Transform& offset,
                    JointKind kind, const Vec6& screw) {
    if (kind == JointKind::Fixed) {
      throw std::invalid_argument("add_joint: use add_frame for fixed frames");
    }
    return add(name, parent, offset, kind, screw);
  }

  int attach_body(const std::string& name, FrameId frame, const SpatialInertia& m) {
    if (frame < 0 || frame >= static_cast<FrameId>(frames_.size())) {
      throw std::out_of_range("attach_body: unknown frame");
    }
    bodies_.push_back({name, frame, m});
    return static_cast<int>(bodies_.size()) - 1;
  }

  FrameId frame_id(const std::string& name) const {
    const auto it = by_name_.find(name);
    if (it == by_name_.end()) {
      throw std::out_of_range("unknown frame: " + name);
    }
    return it->second;
  }

  bool has_frame(const std::string& name) const { return by_name_.count(name) > 0; }

  const Frame& frame(FrameId id) const { return frames_[id]; }
  const std::vector<Frame>& frames() const { return frames_; }
  const std::vector<Body>& bodies() const { return bodies_; }
  int n_frames() const { return static_cast<int>(frames_.size()); }
  int n_q() const { return n_q_; }

  // Pose of frame `id` in its parent at joint value q (ignored for fixed frames).
  Transform local_transform(FrameId id, const Eigen::VectorXd& q) const {
    const Frame& f = frames_[id];
    if (f.kind == JointKind::Fixed) return f.offset;
    return f.offset * exp_screw(f.screw, q[f.q_index]);
  }

 private:
  FrameId add(const std::string& name, FrameId parent, const Transform& offset,
              JointKind kind, const Vec6& screw) {
    if (by_name_.count(name)) {
      throw std::invalid_argument("duplicate frame name: " + name);
    }
    if (parent >= static_cast<FrameId>(frames_.size()) ||
        (parent < 0 && !frames_.empty()) || (parent < 0 && parent != kNoFrame)) {
      throw std::invalid_argument("bad parent for frame: " + name);
    }
    Frame f;
    f.name = name;
    f.parent = parent;
    f.offset = offset;
    f.kind = kind;
    f.screw = screw;
    f.q_index = (kind == JointKind::Fixed) ? -1 : n_q_++;
    frames_.push_back(std::move(f));
    by_name_.emplace(name, static_cast<FrameId>(frames_.size() - 1));
    return static_cast<FrameId>(frames_.size() - 1);
  }

  std::vector<Frame> frames_;
  std::vector<Body> bodies_;
  std::unordered_map<std::string, FrameId> by_name_;
  int n_q_ = 0;
};

}  // namespace asmm
