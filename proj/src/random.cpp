#include "rsi/random.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "rsi/error.hpp"

namespace rsi {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

Word random_message(Rng& rng, const Code& code) {
  Word msg(code.k());
  for (Fe& s : msg) s = Fe{static_cast<std::uint32_t>(rng.below(code.field().order()))};
  return msg;
}

Word random_error(Rng& rng, const Code& code, std::size_t weight) {
  const std::size_t n = code.n();
  if (weight > n) {
    throw std::invalid_argument("error weight " + std::to_string(weight) + " exceeds length " +
                                std::to_string(n));
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < weight; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
  }
  Word e(n, Fe{0});
  const std::uint64_t q = code.field().order();
  for (std::size_t i = 0; i < weight; ++i) {
    e[idx[i]] = Fe{static_cast<std::uint32_t>(1 + rng.below(q - 1))};
  }
  return e;
}

}  // namespace rsi
