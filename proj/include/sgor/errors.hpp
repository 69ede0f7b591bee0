#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgor {

/// Base class for recoverable pipeline errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Parallel sequences (points/labels/weights/descriptors) differ in length.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// Point configuration is rank-deficient (coincident or collinear) for the
/// requested fit.
class DegenerateConfiguration : public Error {
 public:
  using Error::Error;
};

/// A spatial index or query was requested over an empty cloud.
class EmptyCloud : public Error {
 public:
  using Error::Error;
};

/// Ground segmentation found no usable ground points; callers fall back to
/// gate-free verification.
class NoGroundPoints : public Error {
 public:
  using Error::Error;
};

/// The two clouds share no semantic label; registration cannot proceed.
class EmptyOverlap : public Error {
 public:
  using Error::Error;
};

/// Descriptor sets have different vector dimensions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Fewer correspondences than the requested group size.
class GroupTooSmall : public Error {
 public:
  using Error::Error;
};

/// The seed row of the combined consistency matrix is all zero; the group
/// produces no candidate.
class AllZeroRow : public Error {
 public:
  using Error::Error;
};

/// Every local group was dropped; no candidate transform exists.
class NoCandidates : public Error {
 public:
  using Error::Error;
};

/// Synthetic correspondence generation has too few points to sample from.
class TooFewPoints : public Error {
 public:
  using Error::Error;
};

/// A file failed to parse; carries the byte offset of the problem.
class MalformedFile : public Error {
 public:
  MalformedFile(const std::string& path, std::size_t byte_offset,
                const std::string& detail)
      : Error(path + ": " + detail + " (byte offset " +
              std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

}  // namespace sgor
