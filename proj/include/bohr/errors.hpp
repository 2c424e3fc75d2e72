#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

struct BadParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnknownId : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// bracket endpoints do not straddle a root
struct NoSignChange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sampled monotonicity assertion failed on a bracket
struct NonMonotoneDetected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// input mapping fails a normalization precondition (Schur bounds, a0 range,
// dilatation bound)
struct NotNormalized : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// functional requires g'(0) = 0 but the mapping does not declare it
struct MissingB1Zero : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// evaluation point z does not lie on the circle |z| = rho
struct PointOffCircle : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// functional evaluated outside the radius range its coefficient inequality
// is valid on
struct RadiusOutOfLemmaRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a tail cannot be certified at the requested evaluation point
struct TailNotCertifiable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bohr
