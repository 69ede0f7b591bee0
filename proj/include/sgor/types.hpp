#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include <Eigen/Dense>

namespace sgor {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Point cloud where every point carries an integer semantic label drawn
/// from a label universe.
struct SemanticPointCloud {
  std::vector<Vec3> points;
  std::vector<int> labels;
  std::set<int> label_universe;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  /// Set of distinct labels actually present in the cloud.
  std::set<int> present_labels() const;

  /// Throws std::invalid_argument on length mismatch, a label outside the
  /// universe, or a non-finite coordinate.
  void validate() const;

  /// Builds a cloud whose universe is the set of labels present.
  static SemanticPointCloud make(std::vector<Vec3> pts, std::vector<int> lbls);
};

/// Rigid motion: rotation in SO(3) plus translation.
struct RigidTransform {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static RigidTransform identity() { return {}; }

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }

  RigidTransform inverse() const {
    RigidTransform inv;
    inv.rotation = rotation.transpose();
    inv.translation = -(inv.rotation * translation);
    return inv;
  }

  /// Composition: result maps p to this(other(p)).
  RigidTransform compose(const RigidTransform& other) const {
    RigidTransform out;
    out.rotation = rotation * other.rotation;
    out.translation = rotation * other.translation + translation;
    return out;
  }

  Mat4 matrix() const;

  /// True when rotation is orthonormal with det +1 within tol.
  bool is_valid(double tol = 1e-9) const;
};

/// Hypothesized pairing of a source point with a target point.
struct Correspondence {
  int src_index = 0;
  int tgt_index = 0;
  int src_label = 0;
  int tgt_label = 0;
  double feature_distance = 0.0;  // optional; 0 when not produced by matching
};

using CorrespondenceSet = std::vector<Correspondence>;

/// Makes a correspondence whose labels are read from the clouds.
Correspondence make_correspondence(const SemanticPointCloud& src,
                                   const SemanticPointCloud& tgt,
                                   int src_index, int tgt_index,
                                   double feature_distance = 0.0);

/// Throws std::invalid_argument if any correspondence has an out-of-range
/// index or stored labels that disagree with the clouds.
void validate_correspondences(const CorrespondenceSet& set,
                              const SemanticPointCloud& src,
                              const SemanticPointCloud& tgt);

}  // namespace sgor
