#pragma once

#include <stdexcept>

namespace bcfusion {

struct InvalidRank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operands of different rank.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument outside the set on which an operation is defined
// (non-dominant weight, label not in the alcove, wrong sector, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Inconsistent (family, rank, level) combination.
struct ConfigurationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A quotient whose denominator vanishes at the chosen root of unity.
struct SingularEvaluation : std::domain_error {
  using std::domain_error::domain_error;
};

struct CertificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace bcfusion
