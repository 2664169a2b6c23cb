#include "windtree/error.hpp"

namespace windtree {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomainViolation: return "DomainViolation";
    case ErrorKind::kMalformedPermutation: return "MalformedPermutation";
    case ErrorKind::kSizeMismatch: return "SizeMismatch";
    case ErrorKind::kNotConnected: return "NotConnected";
    case ErrorKind::kNonIntegralGenus: return "NonIntegralGenus";
    case ErrorKind::kNotFixedPointFree: return "NotFixedPointFree";
    case ErrorKind::kNotAutomorphism: return "NotAutomorphism";
    case ErrorKind::kOrbitBudgetExceeded: return "OrbitBudgetExceeded";
    case ErrorKind::kGenusPlusNotOne: return "GenusPlusNotOne";
    case ErrorKind::kGenusNotZero: return "GenusNotZero";
    case ErrorKind::kOddRamification: return "OddRamification";
    case ErrorKind::kAsymmetricObstacle: return "AsymmetricObstacle";
    case ErrorKind::kCornerCountMismatch: return "CornerCountMismatch";
    case ErrorKind::kMultipleObstacles: return "MultipleObstacles";
    case ErrorKind::kDisconnectedFreeRegion: return "DisconnectedFreeRegion";
    case ErrorKind::kDisconnectedSurface: return "DisconnectedSurface";
    case ErrorKind::kObstacleTouchesBoundary: return "ObstacleTouchesBoundary";
    case ErrorKind::kObstaclesTouch: return "ObstaclesTouch";
    case ErrorKind::kPatternNotSublatticeInvariant: return "PatternNotSublatticeInvariant";
    case ErrorKind::kSymmetryNotFound: return "SymmetryNotFound";
    case ErrorKind::kCornerHit: return "CornerHit";
    case ErrorKind::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace windtree
