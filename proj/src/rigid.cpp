#include "sgor/rigid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

#include "sgor/errors.hpp"

namespace sgor {

RigidTransform weighted_rigid_solve(std::span<const Vec3> src,
                                    std::span<const Vec3> tgt,
                                    std::span<const double> weights) {
  if (src.size() != tgt.size() || src.size() != weights.size()) {
    throw LengthMismatch("rigid solve: src/tgt/weights lengths differ (" +
                         std::to_string(src.size()) + "/" +
                         std::to_string(tgt.size()) + "/" +
                         std::to_string(weights.size()) + ")");
  }

  double total_weight = 0.0;
  std::size_t positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!(w >= 0.0)) {
      throw std::invalid_argument("rigid solve: weight " + std::to_string(i) +
                                  " is negative or NaN");
    }
    if (w > 0.0) ++positive;
    total_weight += w;
  }
  if (positive < 3 || total_weight <= 0.0) {
    throw DegenerateConfiguration(
        "rigid solve: needs at least 3 pairs with positive weight, got " +
        std::to_string(positive));
  }

  Vec3 src_center = Vec3::Zero();
  Vec3 tgt_center = Vec3::Zero();
  for (std::size_t i = 0; i < src.size(); ++i) {
    src_center += weights[i] * src[i];
    tgt_center += weights[i] * tgt[i];
  }
  src_center /= total_weight;
  tgt_center /= total_weight;

  Mat3 cross = Mat3::Zero();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (weights[i] == 0.0) continue;
    cross += weights[i] * (src[i] - src_center) * (tgt[i] - tgt_center).transpose();
  }
  cross /= total_weight;

  Eigen::JacobiSVD<Mat3> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec3 sigma = svd.singularValues();
  if (sigma[0] <= 0.0 || sigma[1] < 1e-12 * sigma[0]) {
    throw DegenerateConfiguration(
        "rigid solve: weighted points are coincident or collinear");
  }

  Mat3 correction = Mat3::Identity();
  correction(2, 2) = (svd.matrixV() * svd.matrixU().transpose()).determinant() < 0.0
                         ? -1.0
                         : 1.0;

  RigidTransform result;
  result.rotation = svd.matrixV() * correction * svd.matrixU().transpose();
  result.translation = tgt_center - result.rotation * src_center;
  return result;
}

RigidTransform rigid_solve(std::span<const Vec3> src,
                           std::span<const Vec3> tgt) {
  const std::vector<double> ones(src.size(), 1.0);
  return weighted_rigid_solve(src, tgt, ones);
}

std::vector<Vec3> apply_transform(std::span<const Vec3> points,
                                  const RigidTransform& t) {
  std::vector<Vec3> out;
  out.reserve(points.size());
  for (const Vec3& p : points) out.push_back(t.apply(p));
  return out;
}

SemanticPointCloud apply_transform(const SemanticPointCloud& cloud,
                                   const RigidTransform& t) {
  SemanticPointCloud out = cloud;
  for (Vec3& p : out.points) p = t.apply(p);
  return out;
}

}  // namespace sgor
