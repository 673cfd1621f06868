#include "rsi/decode_interp.hpp"

#include "rsi/femat.hpp"

namespace rsi {

namespace {

// Shared steps 1-2. Returns false (with out.error set) when decoding stops
// early, either on failure or on the t = 0 pass-through.
bool locate(const Code& code, std::span<const Fe> received, const Syndromes& s, DecodeResult& out) {
  const Detection det = detect_t(code, s);
  out.trace.rank_checks = det.checks;
  if (!det.t) {
    out.error = DecodeError::TooManyErrors;
    return false;
  }
  out.t = *det.t;
  if (out.t == 0) {
    out.codeword.assign(received.begin(), received.end());
    out.error_vector.assign(code.n(), Fe{0});
    out.locator = Poly{1};
    return false;
  }
  std::optional<Poly> locator = solve_locator(code, s, out.t);
  if (!locator) {
    out.error = DecodeError::SingularLocatorSystem;
    return false;
  }
  out.locator = std::move(*locator);
  return true;
}

}  // namespace

Detection detect_t(const Code& code, const Syndromes& s) {
  const Field& f = code.field();
  const std::size_t r = s.size();
  Detection det;
  for (std::size_t t = 0; t <= code.tau(); ++t) {
    ++det.checks;
    const Matrix narrow = hankel(s.values, r - t, t);
    const Matrix wide = hankel(s.values, r - t, t + 1);
    if (rank(narrow, f) == rank(wide, f)) {
      det.t = t;
      return det;
    }
  }
  return det;
}

std::optional<Poly> solve_locator(const Code& code, const Syndromes& s, std::size_t t) {
  const Field& f = code.field();
  if (t == 0) return Poly{1};
  if (2 * t > s.size()) return std::nullopt;

  const Matrix a = hankel(s.values, t, t);
  std::vector<Fe> rhs(t);
  for (std::size_t i = 0; i < t; ++i) rhs[i] = f.neg(s[t + i]);

  Solution sol = solve(a, rhs, f);
  if (sol.kind != SolveKind::Unique || sol.x[0] == Fe{0}) return std::nullopt;
  sol.x.push_back(Fe{1});
  return Poly(std::move(sol.x));
}

Recovery recover_codeword_from_evaluations(const Code& code, std::span<const Fe> power_evals,
                                           const Poly& locator) {
  const Field& f = code.field();
  const std::size_t n = code.n();
  Recovery rec;

  const Poly f_u = interpolate_from_evaluations(code, power_evals);
  rec.f_u_degree = f_u.degree();

  const Poly zeta = mul(locator, f_u, f);
  if (zeta.size() > n) rec.zeta_high.assign(zeta.coeffs().begin() + n, zeta.coeffs().end());
  rec.mu = Poly(rec.zeta_high);

  Poly x_n_minus_one = Poly::monomial(Fe{1}, n);
  x_n_minus_one = sub(x_n_minus_one, Poly{1}, f);

  const DivRem dr = divrem(mul(x_n_minus_one, rec.mu, f), locator, f);
  if (!dr.remainder.is_zero()) {
    rec.error = DecodeError::InexactDivision;
    return rec;
  }
  rec.codeword_poly = sub(f_u, dr.quotient, f);
  if (rec.codeword_poly.degree() >= code.k()) rec.error = DecodeError::DegreeTooHigh;
  return rec;
}

Recovery recover_codeword(const Code& code, std::span<const Fe> received, const Poly& locator) {
  return recover_codeword_from_evaluations(code, power_evaluations(code, received), locator);
}

DecodeResult decode(const Code& code, std::span<const Fe> received) {
  MulCounter muls;
  DecodeResult out;
  // The syndromes are the first n-k power evaluations; the remaining k are
  // only needed for f_u once an error has been detected.
  const Syndromes s = syndromes(code, received);
  if (locate(code, received, s, out)) {
    const Poly u_poly(Word(received.begin(), received.end()));
    std::vector<Fe> evals = s.values;
    evals.reserve(code.n());
    for (std::size_t j = code.redundancy() + 1; j <= code.n(); ++j) {
      evals.push_back(eval(u_poly, code.point(j), code.field()));
    }

    Recovery rec = recover_codeword_from_evaluations(code, evals, out.locator);
    out.trace.f_u_degree = rec.f_u_degree;
    out.trace.mu = std::move(rec.mu);
    out.trace.zeta_high = std::move(rec.zeta_high);
    if (rec.error != DecodeError::None) {
      out.error = rec.error;
    } else {
      out.codeword = evaluate(code, rec.codeword_poly);
      out.error_vector.resize(code.n());
      for (std::size_t i = 0; i < code.n(); ++i) {
        out.error_vector[i] = code.field().sub(received[i], out.codeword[i]);
      }
      if (!detail::verify(code, received, out)) out.error = DecodeError::VerifyFailed;
    }
  }
  out.trace.mul_count = muls.count();
  return out;
}

DecodeResult decode_via_positions(const Code& code, std::span<const Fe> received) {
  MulCounter muls;
  DecodeResult out;
  const Syndromes s = syndromes(code, received);
  if (locate(code, received, s, out)) {
    DecodeError err = DecodeError::None;
    if (auto e = detail::errors_from_locator(code, s, out.locator, out.t, err)) {
      detail::finish_with_errors(code, received, *e, out);
    } else {
      out.error = err;
    }
  }
  out.trace.mul_count = muls.count();
  return out;
}

}  // namespace rsi
