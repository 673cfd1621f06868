#pragma once

// Dense univariate polynomials over a Field.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsi/gf.hpp"

namespace rsi {

/// Coefficient i is the coefficient of x^i. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients at all.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Fe> coeffs);
  Poly(std::initializer_list<std::uint32_t> coeffs);

  static Poly constant(Fe c) { return Poly(std::vector<Fe>{c}); }
  /// c * x^deg.
  static Poly monomial(Fe c, std::size_t deg);

  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial; std::optional ordering puts it below
  /// every finite degree.
  std::optional<std::size_t> degree() const;
  /// Coefficient of x^i, zero past the degree.
  Fe coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Fe{0}; }
  Fe leading() const { return coeffs_.empty() ? Fe{0} : coeffs_.back(); }
  std::span<const Fe> coeffs() const { return coeffs_; }
  /// Number of stored coefficients (degree + 1, or 0).
  std::size_t size() const { return coeffs_.size(); }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<Fe> coeffs_;
};

/// "4x^5 + 6x^4 + 3", "0" for the zero polynomial.
std::string to_string(const Poly& p);

Poly add(const Poly& a, const Poly& b, const Field& f);
Poly sub(const Poly& a, const Poly& b, const Field& f);
Poly scale(const Poly& a, Fe s, const Field& f);
/// Schoolbook convolution.
Poly mul(const Poly& a, const Poly& b, const Field& f);

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// num = den * quotient + remainder, deg remainder < deg den.
/// Throws DivisionByZeroPoly when den is zero.
DivRem divrem(const Poly& num, const Poly& den, const Field& f);

/// Horner evaluation.
Fe eval(const Poly& p, Fe x, const Field& f);

struct Split {
  Poly low;   // terms of degree < k
  Poly high;  // terms of degree >= k
};

Split split_at(const Poly& p, std::size_t k);

/// Every nonzero root, found by evaluating at alpha^0, alpha^1, ..., alpha^(q-2)
/// and returned in that order.
std::vector<Fe> roots_nonzero(const Poly& p, const Field& f);

}  // namespace rsi
