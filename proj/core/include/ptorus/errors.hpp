#pragma once

#include <stdexcept>
#include <string>

namespace ptorus {

// Domain errors: the input violates a mathematical precondition.
struct NotLoxodromic : std::domain_error {
  using std::domain_error::domain_error;
};
struct IdentityMap : std::domain_error {
  using std::domain_error::domain_error;
};
struct SingularMatrix : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotInUpperHalfPlane : std::domain_error {
  using std::domain_error::domain_error;
};
struct ElementaryPair : std::domain_error {
  using std::domain_error::domain_error;
};
struct InconsistentBase : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotConvergingToInfinity : std::domain_error {
  using std::domain_error::domain_error;
};
struct ZeroMultiplier : std::domain_error {
  using std::domain_error::domain_error;
};
struct DegenerateTarget : std::domain_error {
  using std::domain_error::domain_error;
};
struct NonCommuting : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotParabolic : std::domain_error {
  using std::domain_error::domain_error;
};
struct RadiusMismatch : std::domain_error {
  using std::domain_error::domain_error;
};
struct InvalidSlope : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Runtime errors: the computation itself failed.
struct NewtonDiverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoUpperHalfPlaneRoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyOutput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ptorus
