#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace windtree {

enum class ErrorKind {
  kDomainViolation,
  kMalformedPermutation,
  kSizeMismatch,
  kNotConnected,
  kNonIntegralGenus,
  kNotFixedPointFree,
  kNotAutomorphism,
  kOrbitBudgetExceeded,
  kGenusPlusNotOne,
  kGenusNotZero,
  kOddRamification,
  kAsymmetricObstacle,
  kCornerCountMismatch,
  kMultipleObstacles,
  kDisconnectedFreeRegion,
  kDisconnectedSurface,
  kObstacleTouchesBoundary,
  kObstaclesTouch,
  kPatternNotSublatticeInvariant,
  kSymmetryNotFound,
  kCornerHit,
  kParse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace windtree
