#include "sgor/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sgor {

std::set<int> SemanticPointCloud::present_labels() const {
  return std::set<int>(labels.begin(), labels.end());
}

void SemanticPointCloud::validate() const {
  if (points.size() != labels.size()) {
    throw std::invalid_argument("cloud has " + std::to_string(points.size()) +
                                " points but " + std::to_string(labels.size()) +
                                " labels");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].allFinite()) {
      throw std::invalid_argument("non-finite coordinate at point " +
                                  std::to_string(i));
    }
    if (label_universe.find(labels[i]) == label_universe.end()) {
      throw std::invalid_argument("label " + std::to_string(labels[i]) +
                                  " at point " + std::to_string(i) +
                                  " is outside the label universe");
    }
  }
}

SemanticPointCloud SemanticPointCloud::make(std::vector<Vec3> pts,
                                            std::vector<int> lbls) {
  SemanticPointCloud cloud;
  cloud.points = std::move(pts);
  cloud.labels = std::move(lbls);
  cloud.label_universe =
      std::set<int>(cloud.labels.begin(), cloud.labels.end());
  cloud.validate();
  return cloud;
}

Mat4 RigidTransform::matrix() const {
  Mat4 m = Mat4::Identity();
  m.block<3, 3>(0, 0) = rotation;
  m.block<3, 1>(0, 3) = translation;
  return m;
}

bool RigidTransform::is_valid(double tol) const {
  if (!rotation.allFinite() || !translation.allFinite()) return false;
  const Mat3 gram = rotation.transpose() * rotation;
  if ((gram - Mat3::Identity()).cwiseAbs().maxCoeff() > tol) return false;
  return std::abs(rotation.determinant() - 1.0) <= tol;
}

Correspondence make_correspondence(const SemanticPointCloud& src,
                                   const SemanticPointCloud& tgt,
                                   int src_index, int tgt_index,
                                   double feature_distance) {
  Correspondence c;
  c.src_index = src_index;
  c.tgt_index = tgt_index;
  c.src_label = src.labels.at(static_cast<std::size_t>(src_index));
  c.tgt_label = tgt.labels.at(static_cast<std::size_t>(tgt_index));
  c.feature_distance = feature_distance;
  return c;
}

void validate_correspondences(const CorrespondenceSet& set,
                              const SemanticPointCloud& src,
                              const SemanticPointCloud& tgt) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Correspondence& c = set[i];
    if (c.src_index < 0 || c.src_index >= static_cast<int>(src.size()) ||
        c.tgt_index < 0 || c.tgt_index >= static_cast<int>(tgt.size())) {
      throw std::invalid_argument("correspondence " + std::to_string(i) +
                                  " has an out-of-range index");
    }
    if (c.src_label != src.labels[static_cast<std::size_t>(c.src_index)] ||
        c.tgt_label != tgt.labels[static_cast<std::size_t>(c.tgt_index)]) {
      throw std::invalid_argument("correspondence " + std::to_string(i) +
                                  " stores labels that disagree with the clouds");
    }
  }
}

}  // namespace sgor
