#include "rsi/decode_pgz.hpp"

#include "rsi/decode_interp.hpp"
#include "rsi/femat.hpp"

namespace rsi {

Detection pgz_detect_t(const Code& code, const Syndromes& s) {
  Detection found;
  if (s.all_zero()) {
    found.t = 0;
    return found;
  }
  for (std::size_t h = code.tau(); h >= 1; --h) {
    ++found.checks;
    if (det(hankel(s.values, h, h), code.field()) != Fe{0}) {
      found.t = h;
      return found;
    }
  }
  return found;
}

DecodeResult pgz_decode(const Code& code, std::span<const Fe> received) {
  MulCounter muls;
  DecodeResult out;
  const Syndromes s = syndromes(code, received);
  const Detection detection = pgz_detect_t(code, s);
  out.trace.det_checks = detection.checks;

  if (!detection.t) {
    out.error = DecodeError::TooManyErrors;
  } else if (*detection.t == 0) {
    out.codeword.assign(received.begin(), received.end());
    out.error_vector.assign(code.n(), Fe{0});
    out.locator = Poly{1};
  } else {
    out.t = *detection.t;
    if (std::optional<Poly> locator = solve_locator(code, s, out.t)) {
      out.locator = std::move(*locator);
      DecodeError err = DecodeError::None;
      if (auto e = detail::errors_from_locator(code, s, out.locator, out.t, err)) {
        detail::finish_with_errors(code, received, *e, out);
      } else {
        out.error = err;
      }
    } else {
      out.error = DecodeError::SingularLocatorSystem;
    }
  }
  out.trace.mul_count = muls.count();
  return out;
}

}  // namespace rsi
