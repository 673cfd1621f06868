#include "rsi/gf.hpp"

#include <array>
#include <bit>
#include <ostream>
#include <string>

#include "rsi/error.hpp"

namespace rsi {

namespace {

thread_local std::uint64_t mul_calls = 0;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t v) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

int bit_degree(std::uint32_t x) { return 31 - std::countl_zero(x); }

// Remainder of a by b as GF(2) polynomials.
std::uint32_t gf2_mod(std::uint32_t a, std::uint32_t b) {
  const int db = bit_degree(b);
  while (a != 0 && bit_degree(a) >= db) a ^= b << (bit_degree(a) - db);
  return a;
}

bool gf2_irreducible(std::uint32_t mask, unsigned m) {
  for (unsigned d = 1; 2 * d <= m; ++d) {
    for (std::uint32_t g = 1u << d; g < (2u << d); ++g) {
      if (gf2_mod(mask, g) == 0) return false;
    }
  }
  return true;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, Fe x) { return os << x.value; }

std::uint64_t field_multiplications() { return mul_calls; }

std::uint32_t Field::default_reduction(unsigned m) {
  static constexpr std::array<std::uint32_t, 17> kMasks = {
      0,     0,     0x7,   0xB,    0x13,   0x25,   0x43,   0x89,   0x11D,
      0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443, 0x8003, 0x1100B};
  if (m < 2 || m > kMaxExtensionDegree) {
    throw InvalidField("extension degree must be in [2, 16], got " + std::to_string(m));
  }
  return kMasks[m];
}

Field::Field(FieldKind kind, std::uint32_t p, unsigned m, std::uint32_t reduction)
    : kind_(kind), p_(p), m_(m), q_(kind == FieldKind::Prime ? p : (1u << m)),
      reduction_(reduction), group_prime_factors_(distinct_prime_factors(q_ - 1)) {}

Field Field::prime(std::uint32_t p, std::optional<Fe> alpha) {
  if (p < 3 || p > kMaxPrime || !is_prime(p)) {
    throw InvalidField("prime field order must be a prime in [3, 65521], got " +
                       std::to_string(p));
  }
  Field f(FieldKind::Prime, p, 1, 0);
  f.set_alpha(alpha);
  return f;
}

Field Field::binary(unsigned m, std::optional<std::uint32_t> reduction, std::optional<Fe> alpha) {
  const std::uint32_t mask = reduction ? *reduction : default_reduction(m);
  if (m < 2 || m > kMaxExtensionDegree) {
    throw InvalidField("extension degree must be in [2, 16], got " + std::to_string(m));
  }
  if (bit_degree(mask) != static_cast<int>(m) || !gf2_irreducible(mask, m)) {
    throw InvalidField("reduction mask " + std::to_string(mask) +
                       " is not an irreducible polynomial of degree " + std::to_string(m));
  }
  Field f(FieldKind::BinaryExtension, 2, m, mask);
  f.set_alpha(alpha);
  return f;
}

Field Field::of_order(std::uint32_t q, std::optional<Fe> alpha) {
  if (q >= 4 && std::has_single_bit(q)) {
    return binary(static_cast<unsigned>(std::countr_zero(q)), std::nullopt, alpha);
  }
  if (is_prime(q)) return prime(q, alpha);
  throw InvalidField("unsupported field order " + std::to_string(q) +
                     " (need a prime or a power of two)");
}

void Field::set_alpha(std::optional<Fe> alpha) {
  if (alpha) {
    if (!contains(alpha->value) || !is_primitive_raw(*alpha)) {
      throw InvalidField("element " + std::to_string(alpha->value) +
                         " is not primitive in F_" + std::to_string(q_));
    }
    alpha_ = *alpha;
  } else {
    alpha_ = Fe{0};
    for (std::uint32_t x = 1; x < q_; ++x) {
      if (is_primitive_raw(Fe{x})) {
        alpha_ = Fe{x};
        break;
      }
    }
  }

  const std::uint32_t n = q_ - 1;
  log_.assign(q_, 0);
  antilog_.assign(2 * static_cast<std::size_t>(n), 0);
  Fe x{1};
  for (std::uint32_t i = 0; i < n; ++i) {
    antilog_[i] = x.value;
    antilog_[i + n] = x.value;
    log_[x.value] = i;
    x = mul_raw(x, alpha_);
  }
}

Fe Field::mul_raw(Fe a, Fe b) const {
  if (kind_ == FieldKind::Prime) {
    return Fe{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }
  std::uint32_t x = a.value;
  std::uint32_t y = b.value;
  std::uint32_t r = 0;
  while (y != 0) {
    if (y & 1u) r ^= x;
    y >>= 1;
    x <<= 1;
    if (x & q_) x ^= reduction_;
  }
  return Fe{r};
}

Fe Field::pow_raw(Fe a, std::uint64_t e) const {
  Fe result{1};
  while (e != 0) {
    if (e & 1u) result = mul_raw(result, a);
    a = mul_raw(a, a);
    e >>= 1;
  }
  return result;
}

bool Field::is_primitive_raw(Fe x) const {
  if (x.value == 0) return false;
  const std::uint32_t n = q_ - 1;
  for (std::uint32_t r : group_prime_factors_) {
    if (pow_raw(x, n / r) == Fe{1}) return false;
  }
  return true;
}

Fe Field::element(std::uint64_t value) const {
  if (!contains(value)) {
    throw InvalidField("symbol " + std::to_string(value) + " is not an element of F_" +
                       std::to_string(q_));
  }
  return Fe{static_cast<std::uint32_t>(value)};
}

Fe Field::add(Fe a, Fe b) const {
  if (kind_ == FieldKind::BinaryExtension) return Fe{a.value ^ b.value};
  const std::uint32_t s = a.value + b.value;
  return Fe{s >= p_ ? s - p_ : s};
}

Fe Field::sub(Fe a, Fe b) const {
  if (kind_ == FieldKind::BinaryExtension) return Fe{a.value ^ b.value};
  return Fe{a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
}

Fe Field::neg(Fe a) const {
  if (kind_ == FieldKind::BinaryExtension || a.value == 0) return a;
  return Fe{p_ - a.value};
}

Fe Field::mul(Fe a, Fe b) const {
  ++mul_calls;
  if (a.value == 0 || b.value == 0) return Fe{0};
  return Fe{antilog_[log_[a.value] + log_[b.value]]};
}

Fe Field::inv(Fe a) const {
  if (a.value == 0) throw DivisionByZero();
  const std::uint32_t l = log_[a.value];
  return Fe{antilog_[l == 0 ? 0 : (q_ - 1) - l]};
}

Fe Field::pow(Fe a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Fe result{1};
  auto ue = static_cast<std::uint64_t>(e);
  while (ue != 0) {
    if (ue & 1u) result = mul(result, a);
    ue >>= 1;
    if (ue != 0) a = mul(a, a);
  }
  return result;
}

Fe Field::alpha_pow(std::int64_t i) const {
  const std::int64_t n = q_ - 1;
  std::int64_t r = i % n;
  if (r < 0) r += n;
  return Fe{antilog_[static_cast<std::size_t>(r)]};
}

std::uint32_t Field::dlog(Fe x) const {
  if (x.value == 0) throw DlogOfZero();
  return log_[x.value];
}

bool Field::is_primitive(Fe x) const { return contains(x.value) && is_primitive_raw(x); }

Fe find_primitive(const Field& f) {
  for (std::uint32_t x = 1; x < f.order(); ++x) {
    if (f.is_primitive(Fe{x})) return Fe{x};
  }
  // Unreachable: every finite field has a primitive element.
  throw InvalidField("no primitive element found");
}

}  // namespace rsi
