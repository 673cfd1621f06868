#pragma once

// Result types shared by the interpolation decoder and the PGZ decoder.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rsi/poly.hpp"
#include "rsi/rscode.hpp"

namespace rsi {

enum class DecodeError {
  None,
  TooManyErrors,
  SingularLocatorSystem,
  InexactDivision,
  DegreeTooHigh,
  RootCountMismatch,
  VerifyFailed,
};

std::string_view to_string(DecodeError e);

/// Counters and intermediate values of one decode call.
struct DecodeTrace {
  /// Rank comparisons in the ascending error-count search (one per candidate t).
  std::size_t rank_checks = 0;
  /// Determinants evaluated in the descending PGZ scan.
  std::size_t det_checks = 0;
  /// deg f_u, when the interpolation path computed f_u (nullopt for f_u = 0).
  std::optional<std::size_t> f_u_degree;
  /// mu = zeta_n + zeta_(n+1) x + ... read off lambda * f_u.
  Poly mu;
  std::vector<Fe> zeta_high;
  /// Field multiplications performed during the call.
  std::uint64_t mul_count = 0;
};

struct DecodeResult {
  DecodeError error = DecodeError::None;
  /// Detected error count; meaningful once detection succeeded.
  std::size_t t = 0;
  Word codeword;
  /// received - codeword.
  Word error_vector;
  /// Monic error locator of degree t (the constant 1 when t = 0).
  Poly locator;
  DecodeTrace trace;

  bool ok() const { return error == DecodeError::None; }
};

/// Outcome of an error-count search.
struct Detection {
  /// nullopt means TooManyErrors.
  std::optional<std::size_t> t;
  std::size_t checks = 0;
};

enum class DecoderKind { Interp, InterpPositions, Pgz };

std::string_view to_string(DecoderKind d);
/// Accepts "interp", "interp_positions" / "interp-pos", "pgz".
std::optional<DecoderKind> parse_decoder(std::string_view name);

DecodeResult run_decoder(DecoderKind kind, const Code& code, std::span<const Fe> received);

namespace detail {

/// Error positions from the nonzero roots of `locator`, then error values
/// from the t x t system [alpha^((r+1) i_j)] e = (s_1, ..., s_t). Sets
/// `error` and returns nullopt on failure.
std::optional<Word> errors_from_locator(const Code& code, const Syndromes& s, const Poly& locator,
                                        std::size_t t, DecodeError& error);

/// Fills codeword/error_vector from `received - errors` and runs the final
/// membership + distance check.
void finish_with_errors(const Code& code, std::span<const Fe> received, const Word& errors,
                        DecodeResult& out);

/// Membership of out.codeword and hamming(received, codeword) <= out.t.
bool verify(const Code& code, std::span<const Fe> received, const DecodeResult& out);

}  // namespace detail

}  // namespace rsi
