#pragma once

#include <span>
#include <vector>

#include "sgor/types.hpp"

namespace sgor {

/// Weighted least-squares rigid fit: returns the transform minimizing
/// sum_i w_i * ||R*src_i + t - tgt_i||^2 (weighted Kabsch via SVD of the
/// weighted cross-covariance, with det-sign reflection correction).
///
/// Throws LengthMismatch on size disagreement and DegenerateConfiguration
/// when fewer than 3 pairs carry positive weight or the weighted points are
/// coincident/collinear (two smallest singular values below 1e-12 of the
/// largest).
RigidTransform weighted_rigid_solve(std::span<const Vec3> src,
                                    std::span<const Vec3> tgt,
                                    std::span<const double> weights);

/// Unit-weight rigid fit.
RigidTransform rigid_solve(std::span<const Vec3> src,
                           std::span<const Vec3> tgt);

std::vector<Vec3> apply_transform(std::span<const Vec3> points,
                                  const RigidTransform& t);

/// Transforms coordinates; labels and universe are untouched.
SemanticPointCloud apply_transform(const SemanticPointCloud& cloud,
                                   const RigidTransform& t);

}  // namespace sgor
