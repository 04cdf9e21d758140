#pragma once

#include <stdexcept>
#include <string>

namespace zksym {

/// Input outside the admissible domain (bad metric parameters, S outside
/// the branch interval, malformed files). Maps to CLI exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is admissible in principle but numerically unusable: K below the
/// degeneracy guard, singular Gram matrix, failed validation. Exit code 2.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateMetric : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace zksym
