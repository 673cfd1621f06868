#include "rsi/decoder.hpp"

#include "rsi/decode_interp.hpp"
#include "rsi/decode_pgz.hpp"
#include "rsi/femat.hpp"
#include "rsi/oracle.hpp"

namespace rsi {

std::string_view to_string(DecodeError e) {
  switch (e) {
    case DecodeError::None: return "ok";
    case DecodeError::TooManyErrors: return "TooManyErrors";
    case DecodeError::SingularLocatorSystem: return "SingularLocatorSystem";
    case DecodeError::InexactDivision: return "InexactDivision";
    case DecodeError::DegreeTooHigh: return "DegreeTooHigh";
    case DecodeError::RootCountMismatch: return "RootCountMismatch";
    case DecodeError::VerifyFailed: return "VerifyFailed";
  }
  return "unknown";
}

std::string_view to_string(DecoderKind d) {
  switch (d) {
    case DecoderKind::Interp: return "interp";
    case DecoderKind::InterpPositions: return "interp_positions";
    case DecoderKind::Pgz: return "pgz";
  }
  return "unknown";
}

std::optional<DecoderKind> parse_decoder(std::string_view name) {
  if (name == "interp") return DecoderKind::Interp;
  if (name == "interp_positions" || name == "interp-pos") return DecoderKind::InterpPositions;
  if (name == "pgz") return DecoderKind::Pgz;
  return std::nullopt;
}

DecodeResult run_decoder(DecoderKind kind, const Code& code, std::span<const Fe> received) {
  switch (kind) {
    case DecoderKind::Interp: return decode(code, received);
    case DecoderKind::InterpPositions: return decode_via_positions(code, received);
    case DecoderKind::Pgz: return pgz_decode(code, received);
  }
  return decode(code, received);
}

namespace detail {

std::optional<Word> errors_from_locator(const Code& code, const Syndromes& s, const Poly& locator,
                                        std::size_t t, DecodeError& error) {
  const Field& f = code.field();
  const std::vector<Fe> roots = roots_nonzero(locator, f);
  if (roots.size() != t) {
    error = DecodeError::RootCountMismatch;
    return std::nullopt;
  }

  std::vector<std::size_t> positions;
  positions.reserve(t);
  for (Fe r : roots) positions.push_back(f.dlog(r));

  Matrix m(t, t);
  for (std::size_t r = 0; r < t; ++r) {
    for (std::size_t j = 0; j < t; ++j) {
      m(r, j) = f.alpha_pow(static_cast<std::int64_t>((r + 1) * positions[j]));
    }
  }
  const Solution sol = solve(m, std::span<const Fe>(s.values).first(t), f);
  if (sol.kind != SolveKind::Unique) {
    error = DecodeError::SingularLocatorSystem;
    return std::nullopt;
  }

  Word e(code.n(), Fe{0});
  for (std::size_t j = 0; j < t; ++j) e[positions[j]] = sol.x[j];
  return e;
}

bool verify(const Code& code, std::span<const Fe> received, const DecodeResult& out) {
  return out.codeword.size() == code.n() && is_codeword(code, out.codeword) &&
         hamming(received, out.codeword) <= out.t;
}

void finish_with_errors(const Code& code, std::span<const Fe> received, const Word& errors,
                        DecodeResult& out) {
  const Field& f = code.field();
  out.error_vector = errors;
  out.codeword.resize(code.n());
  for (std::size_t i = 0; i < code.n(); ++i) out.codeword[i] = f.sub(received[i], errors[i]);
  if (!verify(code, received, out)) out.error = DecodeError::VerifyFailed;
}

}  // namespace detail

}  // namespace rsi
