#pragma once

#include <vector>

#include "sgor/types.hpp"

namespace sgor {

/// Exact spatial index over a fixed set of points (kd-tree). Immutable after
/// construction; queries return precisely what a brute-force scan returns.
/// Safe for concurrent queries.
class NeighborIndex {
 public:
  /// Throws EmptyCloud when points is empty.
  explicit NeighborIndex(const std::vector<Vec3>& points);

  std::size_t size() const { return points_.size(); }

  /// Indices of all points with ||p - center|| <= radius, ascending index.
  /// Throws std::invalid_argument when radius <= 0.
  std::vector<int> radius_query(const Vec3& center, double radius) const;

  /// Indices of the k nearest points, sorted by ascending distance, ties by
  /// ascending index. Throws std::invalid_argument unless 1 <= k <= size().
  std::vector<int> knn_query(const Vec3& center, int k) const;

 private:
  struct Node {
    int axis = -1;        // -1 marks a leaf
    double split = 0.0;
    int left = -1;
    int right = -1;
    int begin = 0;        // leaf range into order_
    int end = 0;
  };

  int build(int begin, int end);
  void collect_radius(int node, const Vec3& center, double r2,
                      std::vector<int>& out) const;

  std::vector<Vec3> points_;
  std::vector<int> order_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace sgor
