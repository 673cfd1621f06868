#pragma once

// RS_{q,alpha}(k): the full-length Reed-Solomon code of length n = q - 1 whose
// codewords are the evaluations (a(1), a(alpha), ..., a(alpha^(n-1))) of the
// polynomials a of degree < k.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rsi/femat.hpp"
#include "rsi/gf.hpp"
#include "rsi/poly.hpp"

namespace rsi {

/// A length-n received/code/error word, or a length-k message.
using Word = std::vector<Fe>;

class Code {
 public:
  /// Throws InvalidCode unless 1 <= k < n.
  Code(std::shared_ptr<const Field> field, std::size_t k);

  /// Convenience: Field::of_order(q, alpha) wrapped in a code of dimension k.
  static Code make(std::uint32_t q, std::size_t k, std::optional<Fe> alpha = std::nullopt);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  /// Number of parity symbols, n - k.
  std::size_t redundancy() const { return n_ - k_; }
  std::size_t min_distance() const { return n_ - k_ + 1; }
  /// floor((n - k) / 2).
  std::size_t tau() const { return (n_ - k_) / 2; }

  /// Evaluation point of position i, alpha^i.
  Fe point(std::size_t i) const { return field_->alpha_pow(static_cast<std::int64_t>(i)); }

 private:
  std::shared_ptr<const Field> field_;
  std::size_t n_;
  std::size_t k_;
};

/// s[j - 1] = u(alpha^j) for j = 1..n-k, where u(x) = u_0 + u_1 x + ... .
struct Syndromes {
  std::vector<Fe> values;

  bool all_zero() const;
  std::size_t size() const { return values.size(); }
  Fe operator[](std::size_t i) const { return values[i]; }
};

/// k x n, G[i][j] = alpha^(i j).
Matrix generator_matrix(const Code& code);
/// (n-k) x n, H[i][j] = alpha^((i+1) j).
Matrix parity_matrix(const Code& code);

/// msg * G. Throws LengthMismatch unless msg.size() == k.
Word encode(const Code& code, std::span<const Fe> msg);

/// (p(1), p(alpha), ..., p(alpha^(n-1))).
Word evaluate(const Code& code, const Poly& p);

/// u(alpha^1), ..., u(alpha^n) with u read as u_0 + u_1 x + ... ; the first
/// n - k entries are the syndromes.
std::vector<Fe> power_evaluations(const Code& code, std::span<const Fe> u);

Syndromes syndromes(const Code& code, std::span<const Fe> u);

/// Interpolation polynomial f_u with f_u(alpha^i) = u_i, built from the power
/// evaluations: the coefficient of x^i is -u(alpha^(n-i)).
Poly interpolate(const Code& code, std::span<const Fe> u);
Poly interpolate_from_evaluations(const Code& code, std::span<const Fe> power_evals);

/// Closed form of the Lagrange basis polynomial for position i:
/// -(alpha^i x^(n-1) + alpha^(2i) x^(n-2) + ... + alpha^(ni)).
Poly lagrange_basis(const Code& code, std::size_t i);

/// All n - k syndromes vanish.
bool is_codeword(const Code& code, std::span<const Fe> u);
/// deg f_u < k.
bool is_codeword_by_degree(const Code& code, std::span<const Fe> u);

}  // namespace rsi
