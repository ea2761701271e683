#pragma once
#include <stdexcept>

namespace serreq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error { using Error::Error; };
struct InhomogeneousInput : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct IllFormedMap : Error { using Error::Error; };
struct ZeroModule : Error { using Error::Error; };
struct StabilizationFailure : Error { using Error::Error; };
struct SourceTargetMismatch : Error { using Error::Error; };
struct GroupMismatch : Error { using Error::Error; };
struct RepsEquivalent : Error { using Error::Error; };
struct HypothesisViolation : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace serreq
