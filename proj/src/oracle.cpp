#include "rsi/oracle.hpp"

#include <limits>
#include <string>

#include "rsi/error.hpp"

namespace rsi {

std::size_t hamming(std::span<const Fe> a, std::span<const Fe> b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("hamming distance of words of length " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()));
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::size_t weight(std::span<const Fe> a) {
  std::size_t w = 0;
  for (Fe x : a) w += x != Fe{0};
  return w;
}

Codebook::Codebook(const Code& code) : n_(code.n()) {
  const std::uint64_t q = code.field().order();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < code.k(); ++i) {
    count *= q;
    if (count > kMaxEnumerable) {
      throw TooLargeToEnumerate("q^k exceeds " + std::to_string(kMaxEnumerable));
    }
  }
  count_ = static_cast<std::size_t>(count);
  words_.reserve(count_ * n_);

  Word msg(code.k(), Fe{0});
  for (std::size_t idx = 0; idx < count_; ++idx) {
    const Word c = encode(code, msg);
    words_.insert(words_.end(), c.begin(), c.end());
    // Odometer increment, last symbol fastest, keeps lexicographic order.
    for (std::size_t pos = msg.size(); pos-- > 0;) {
      if (++msg[pos].value < q) break;
      msg[pos].value = 0;
    }
  }
}

std::span<const Fe> Codebook::codeword(std::size_t index) const {
  return std::span<const Fe>(words_).subspan(index * n_, n_);
}

OracleResult Codebook::nearest(std::span<const Fe> u) const {
  if (u.size() != n_) throw LengthMismatch("word length differs from code length");
  std::size_t best = 0;
  std::size_t best_d = std::numeric_limits<std::size_t>::max();
  std::size_t ties = 0;
  for (std::size_t i = 0; i < count_; ++i) {
    const std::size_t d = hamming(u, codeword(i));
    if (d < best_d) {
      best_d = d;
      best = i;
      ties = 0;
    } else if (d == best_d) {
      ++ties;
    }
  }
  const auto c = codeword(best);
  return {Word(c.begin(), c.end()), best_d, ties == 0};
}

std::size_t Codebook::min_distance() const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 1; i < count_; ++i) {
    const std::size_t w = weight(codeword(i));
    if (w < best) best = w;
  }
  return best;
}

OracleResult brute_nearest(const Code& code, std::span<const Fe> u) {
  return Codebook(code).nearest(u);
}

std::size_t brute_min_distance(const Code& code) { return Codebook(code).min_distance(); }

}  // namespace rsi
