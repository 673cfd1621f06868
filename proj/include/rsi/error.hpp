#pragma once

#include <stdexcept>
#include <string>

namespace rsi {

/// Raised for inversion, division or negative powers of zero in F_q.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in finite field") {}
};

class DlogOfZero : public std::domain_error {
 public:
  DlogOfZero() : std::domain_error("discrete logarithm of zero") {}
};

class DivisionByZeroPoly : public std::domain_error {
 public:
  DivisionByZeroPoly() : std::domain_error("polynomial division by the zero polynomial") {}
};

/// Unsupported or malformed field parameters (q, reduction mask, alpha).
class InvalidField : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Code parameters outside 1 <= k < n.
class InvalidCode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PositionOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NonSquare : public std::invalid_argument {
 public:
  NonSquare() : std::invalid_argument("determinant of a non-square matrix") {}
};

class TooLargeToEnumerate : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ConfigInvalid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rsi
