#pragma once

// Exhaustive reference decoding for small codes. Used as test ground truth.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rsi/rscode.hpp"

namespace rsi {

/// Number of differing positions. Throws LengthMismatch.
std::size_t hamming(std::span<const Fe> a, std::span<const Fe> b);
/// Number of nonzero symbols.
std::size_t weight(std::span<const Fe> a);

struct OracleResult {
  Word nearest;
  std::size_t distance = 0;
  /// False when another codeword ties at the same distance; `nearest` is then
  /// the codeword of the lexicographically smallest message.
  bool unique = true;
};

/// Largest q^k the oracle will enumerate.
inline constexpr std::uint64_t kMaxEnumerable = 1'000'000;

/// Every codeword of a small code, listed in lexicographic message order
/// (msg[0] most significant). Build once, query many times.
class Codebook {
 public:
  /// Throws TooLargeToEnumerate when q^k > kMaxEnumerable.
  explicit Codebook(const Code& code);

  std::size_t size() const { return count_; }
  std::span<const Fe> codeword(std::size_t index) const;

  OracleResult nearest(std::span<const Fe> u) const;
  /// Minimum weight over nonzero codewords.
  std::size_t min_distance() const;

 private:
  std::size_t n_;
  std::size_t count_;
  std::vector<Fe> words_;  // count_ * n_ symbols
};

OracleResult brute_nearest(const Code& code, std::span<const Fe> u);
std::size_t brute_min_distance(const Code& code);

}  // namespace rsi
