#pragma once

// Seeded randomness with a platform-independent output sequence.

#include <cstdint>
#include <random>

#include "rsi/rscode.hpp"

namespace rsi {

/// std::mt19937_64 (its sequence is fixed by the standard) plus an unbiased
/// bounded draw that does not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// k uniform symbols.
Word random_message(Rng& rng, const Code& code);

/// Length-n word with exactly `weight` nonzero symbols: support drawn by a
/// partial Fisher-Yates shuffle, values uniform in [1, q).
Word random_error(Rng& rng, const Code& code, std::size_t weight);

}  // namespace rsi
