#include "rsi/poly.hpp"

#include <algorithm>
#include <sstream>

#include "rsi/error.hpp"

namespace rsi {

Poly::Poly(std::vector<Fe> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<std::uint32_t> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (std::uint32_t c : coeffs) coeffs_.push_back(Fe{c});
  trim();
}

Poly Poly::monomial(Fe c, std::size_t deg) {
  std::vector<Fe> v(deg + 1, Fe{0});
  v[deg] = c;
  return Poly(std::move(v));
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Fe{0}) coeffs_.pop_back();
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Fe c = p.coeff(i);
    if (c == Fe{0}) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != Fe{1}) os << c.value;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

Poly add(const Poly& a, const Poly& b, const Field& f) {
  std::vector<Fe> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(r));
}

Poly sub(const Poly& a, const Poly& b, const Field& f) {
  std::vector<Fe> r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(r));
}

Poly scale(const Poly& a, Fe s, const Field& f) {
  std::vector<Fe> r(a.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.mul(a.coeff(i), s);
  return Poly(std::move(r));
}

Poly mul(const Poly& a, const Poly& b, const Field& f) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Fe> r(a.size() + b.size() - 1, Fe{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Fe ai = a.coeff(i);
    if (ai == Fe{0}) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = f.add(r[i + j], f.mul(ai, b.coeff(j)));
    }
  }
  return Poly(std::move(r));
}

DivRem divrem(const Poly& num, const Poly& den, const Field& f) {
  if (den.is_zero()) throw DivisionByZeroPoly();
  if (num.size() < den.size()) return {Poly{}, num};

  std::vector<Fe> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<Fe> quot(num.size() - den.size() + 1, Fe{0});
  const Fe lead_inv = f.inv(den.leading());
  const std::size_t dn = den.size();
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Fe c = f.mul(rem[i + dn - 1], lead_inv);
    quot[i] = c;
    if (c == Fe{0}) continue;
    for (std::size_t j = 0; j < dn; ++j) {
      rem[i + j] = f.sub(rem[i + j], f.mul(c, den.coeff(j)));
    }
  }
  rem.resize(dn - 1);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Fe eval(const Poly& p, Fe x, const Field& f) {
  Fe acc{0};
  for (std::size_t i = p.size(); i-- > 0;) acc = f.add(f.mul(acc, x), p.coeff(i));
  return acc;
}

Split split_at(const Poly& p, std::size_t k) {
  const auto c = p.coeffs();
  const std::size_t cut = std::min(k, c.size());
  std::vector<Fe> low(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(cut));
  std::vector<Fe> high(c.begin(), c.end());
  std::fill(high.begin(), high.begin() + static_cast<std::ptrdiff_t>(cut), Fe{0});
  return {Poly(std::move(low)), Poly(std::move(high))};
}

std::vector<Fe> roots_nonzero(const Poly& p, const Field& f) {
  std::vector<Fe> roots;
  for (std::uint32_t i = 0; i < f.group_order(); ++i) {
    const Fe x = f.alpha_pow(i);
    if (eval(p, x, f) == Fe{0}) roots.push_back(x);
  }
  return roots;
}

}  // namespace rsi
