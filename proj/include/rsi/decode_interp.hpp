#pragma once

// Interpolation-based decoding.
//
// The received word u is split through its interpolation polynomial
// f_u = h_u + g_u (terms of degree >= k and < k). The error count t is the
// smallest t whose syndrome Hankel matrix gains no rank when one more column
// is appended; the monic locator lambda of degree t solves the t x t Hankel
// system. The high coefficients of lambda * f_u give mu with
// lambda * (f_u - g_c) = mu * (x^n - 1), so
//
//   g_c = f_u - (x^n - 1) * mu / lambda,
//
// and the codeword is g_c evaluated at 1, alpha, ..., alpha^(n-1).

#include <optional>
#include <span>

#include "rsi/decoder.hpp"

namespace rsi {

/// Ascends t = 0, 1, ..., tau and stops at the first t where
/// rank [s_(i+j+1)]_(n-k-t) x t == rank [s_(i+j+1)]_(n-k-t) x (t+1).
/// checks counts candidates tried.
Detection detect_t(const Code& code, const Syndromes& s);

/// Monic x^t + l_(t-1) x^(t-1) + ... + l_0 from the square system
/// [s_(i+j+1)] l = -(s_(t+1), ..., s_(2t)). nullopt when the system is not
/// uniquely solvable or l_0 = 0 (both impossible within capability).
std::optional<Poly> solve_locator(const Code& code, const Syndromes& s, std::size_t t);

struct Recovery {
  DecodeError error = DecodeError::None;
  /// g_c, of degree < k on success.
  Poly codeword_poly;
  Poly mu;
  std::vector<Fe> zeta_high;
  std::optional<std::size_t> f_u_degree;
};

/// Steps 3-4: f_u, zeta = lambda * f_u, mu, exact division, g_c.
Recovery recover_codeword(const Code& code, std::span<const Fe> received, const Poly& locator);
/// Same, reusing u(alpha^1..alpha^n) already computed by the caller.
Recovery recover_codeword_from_evaluations(const Code& code, std::span<const Fe> power_evals,
                                           const Poly& locator);

DecodeResult decode(const Code& code, std::span<const Fe> received);

/// Same steps 1-2, then positions from the locator's roots and values from a
/// t x t Vandermonde-type system instead of the polynomial division.
DecodeResult decode_via_positions(const Code& code, std::span<const Fe> received);

}  // namespace rsi
