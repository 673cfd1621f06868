#include "rsi/rscode.hpp"

#include <algorithm>
#include <string>

#include "rsi/error.hpp"

namespace rsi {

namespace {

void require_length(std::span<const Fe> u, std::size_t len, const char* what) {
  if (u.size() != len) {
    throw LengthMismatch(std::string(what) + " must have " + std::to_string(len) +
                         " symbols, got " + std::to_string(u.size()));
  }
}

// u(x) for the word read as a coefficient vector.
Fe eval_word(std::span<const Fe> u, Fe x, const Field& f) {
  Fe acc{0};
  for (std::size_t i = u.size(); i-- > 0;) acc = f.add(f.mul(acc, x), u[i]);
  return acc;
}

}  // namespace

Code::Code(std::shared_ptr<const Field> field, std::size_t k) : field_(std::move(field)), k_(k) {
  if (!field_) throw InvalidCode("code requires a field");
  n_ = field_->group_order();
  if (k_ < 1 || k_ >= n_) {
    throw InvalidCode("dimension k must satisfy 1 <= k < n = " + std::to_string(n_) + ", got " +
                      std::to_string(k_));
  }
}

Code Code::make(std::uint32_t q, std::size_t k, std::optional<Fe> alpha) {
  return Code(std::make_shared<const Field>(Field::of_order(q, alpha)), k);
}

bool Syndromes::all_zero() const {
  return std::all_of(values.begin(), values.end(), [](Fe x) { return x == Fe{0}; });
}

Matrix generator_matrix(const Code& code) {
  Matrix g(code.k(), code.n());
  for (std::size_t i = 0; i < code.k(); ++i) {
    for (std::size_t j = 0; j < code.n(); ++j) {
      g(i, j) = code.field().alpha_pow(static_cast<std::int64_t>(i * j));
    }
  }
  return g;
}

Matrix parity_matrix(const Code& code) {
  Matrix h(code.redundancy(), code.n());
  for (std::size_t i = 0; i < code.redundancy(); ++i) {
    for (std::size_t j = 0; j < code.n(); ++j) {
      h(i, j) = code.field().alpha_pow(static_cast<std::int64_t>((i + 1) * j));
    }
  }
  return h;
}

Word encode(const Code& code, std::span<const Fe> msg) {
  require_length(msg, code.k(), "message");
  return evaluate(code, Poly(Word(msg.begin(), msg.end())));
}

Word evaluate(const Code& code, const Poly& p) {
  Word out(code.n());
  for (std::size_t i = 0; i < code.n(); ++i) out[i] = eval(p, code.point(i), code.field());
  return out;
}

std::vector<Fe> power_evaluations(const Code& code, std::span<const Fe> u) {
  require_length(u, code.n(), "word");
  std::vector<Fe> out(code.n());
  for (std::size_t j = 1; j <= code.n(); ++j) {
    out[j - 1] = eval_word(u, code.point(j), code.field());
  }
  return out;
}

Syndromes syndromes(const Code& code, std::span<const Fe> u) {
  require_length(u, code.n(), "word");
  Syndromes s;
  s.values.resize(code.redundancy());
  for (std::size_t j = 1; j <= code.redundancy(); ++j) {
    s.values[j - 1] = eval_word(u, code.point(j), code.field());
  }
  return s;
}

Poly interpolate_from_evaluations(const Code& code, std::span<const Fe> power_evals) {
  require_length(power_evals, code.n(), "power evaluation vector");
  const std::size_t n = code.n();
  std::vector<Fe> c(n);
  // Coefficient i is -u(alpha^(n-i)); power_evals[j-1] holds u(alpha^j).
  for (std::size_t i = 0; i < n; ++i) c[i] = code.field().neg(power_evals[n - i - 1]);
  return Poly(std::move(c));
}

Poly interpolate(const Code& code, std::span<const Fe> u) {
  return interpolate_from_evaluations(code, power_evaluations(code, u));
}

Poly lagrange_basis(const Code& code, std::size_t i) {
  if (i >= code.n()) {
    throw PositionOutOfRange("position " + std::to_string(i) + " outside [0, " +
                             std::to_string(code.n()) + ")");
  }
  const std::size_t n = code.n();
  const Field& f = code.field();
  std::vector<Fe> c(n);
  // x^(n-j) carries -alpha^(j i), j = 1..n.
  for (std::size_t j = 1; j <= n; ++j) {
    c[n - j] = f.neg(f.alpha_pow(static_cast<std::int64_t>(j * i)));
  }
  return Poly(std::move(c));
}

bool is_codeword(const Code& code, std::span<const Fe> u) { return syndromes(code, u).all_zero(); }

bool is_codeword_by_degree(const Code& code, std::span<const Fe> u) {
  return interpolate(code, u).degree() < code.k();
}

}  // namespace rsi
