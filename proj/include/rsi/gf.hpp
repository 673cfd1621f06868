#pragma once

// Exact arithmetic in F_q for prime q and for binary extensions q = 2^m.
//
// Elements are canonical integers in [0, q): residues mod p for prime fields,
// coefficient bit-vectors (bit i = coefficient of x^i) for GF(2^m). A Field is
// immutable once constructed and carries eagerly built log/antilog tables for
// its primitive element alpha, so every operation is a pure const call.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace rsi {

/// One field element, always canonical for the field that produced it.
struct Fe {
  std::uint32_t value = 0;

  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

std::ostream& operator<<(std::ostream& os, Fe x);

enum class FieldKind { Prime, BinaryExtension };

class Field {
 public:
  static constexpr std::uint32_t kMaxPrime = 65521;
  static constexpr unsigned kMaxExtensionDegree = 16;

  /// F_p for a prime 3 <= p <= 65521. Without `alpha` the smallest primitive
  /// element is used; a supplied alpha must be primitive.
  static Field prime(std::uint32_t p, std::optional<Fe> alpha = std::nullopt);

  /// GF(2^m), 2 <= m <= 16, reducing by `reduction` (bit m set). Without a
  /// mask a fixed default is used (0x11D for m = 8). The mask is checked for
  /// irreducibility.
  static Field binary(unsigned m, std::optional<std::uint32_t> reduction = std::nullopt,
                      std::optional<Fe> alpha = std::nullopt);

  /// Dispatches on q: a prime gives F_q, a power of two gives GF(2^m) with the
  /// default mask. Odd prime powers are unsupported.
  static Field of_order(std::uint32_t q, std::optional<Fe> alpha = std::nullopt);

  /// Default reduction mask used by binary(m) when none is given.
  static std::uint32_t default_reduction(unsigned m);

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  /// Size of the multiplicative group, q - 1.
  std::uint32_t group_order() const { return q_ - 1; }
  /// Reduction mask (binary extensions only, 0 for prime fields).
  std::uint32_t reduction() const { return reduction_; }
  Fe alpha() const { return alpha_; }

  bool contains(std::uint64_t value) const { return value < q_; }
  /// Checked conversion from an integer; throws InvalidField when value >= q.
  Fe element(std::uint64_t value) const;

  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const;
  Fe neg(Fe a) const;
  Fe mul(Fe a, Fe b) const;
  /// Throws DivisionByZero for a = 0.
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  /// Square-and-multiply; negative exponents invert first.
  Fe pow(Fe a, std::int64_t e) const;

  /// alpha^i for any integer i, via the antilog table.
  Fe alpha_pow(std::int64_t i) const;
  /// The unique i in [0, q-2] with alpha^i = x. Throws DlogOfZero.
  std::uint32_t dlog(Fe x) const;

  /// True when x has multiplicative order exactly q - 1.
  bool is_primitive(Fe x) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.q_ == b.q_ && a.reduction_ == b.reduction_ &&
           a.alpha_ == b.alpha_;
  }

 private:
  Field(FieldKind kind, std::uint32_t p, unsigned m, std::uint32_t reduction);

  void set_alpha(std::optional<Fe> alpha);
  Fe mul_raw(Fe a, Fe b) const;
  Fe pow_raw(Fe a, std::uint64_t e) const;
  bool is_primitive_raw(Fe x) const;

  FieldKind kind_;
  std::uint32_t p_;
  unsigned m_;
  std::uint32_t q_;
  std::uint32_t reduction_;
  Fe alpha_;
  // Distinct prime divisors of q - 1, for order tests.
  std::vector<std::uint32_t> group_prime_factors_;
  std::vector<std::uint32_t> log_;
  // Two periods long so that log a + log b indexes without a reduction.
  std::vector<std::uint32_t> antilog_;
};

/// Smallest canonical nonzero element of multiplicative order q - 1.
Fe find_primitive(const Field& f);

/// Running count of Field::mul calls made on the current thread.
std::uint64_t field_multiplications();

/// Counts field multiplications performed on this thread while alive.
class MulCounter {
 public:
  MulCounter() : start_(field_multiplications()) {}
  std::uint64_t count() const { return field_multiplications() - start_; }

 private:
  std::uint64_t start_;
};

}  // namespace rsi
