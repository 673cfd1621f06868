#pragma once

// Block stream framing for the command-line tool.
//
// Binary layout (little endian):
//   magic "RSIC" | version u8 = 1 | q u32 | k u32 | alpha u32 | payload_len u64
// followed by the n-symbol blocks, one byte per symbol (q <= 256 only).
//
// Text layout: a first line "RSIC 1 <q> <k> <alpha> <payload_len>", then one
// block per line as whitespace-separated decimal symbols.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "rsi/rscode.hpp"

namespace rsi {

enum class SymbolFormat { Text, Binary };

/// Malformed or out-of-range input data.
class StreamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StreamHeader {
  static constexpr char kMagic[4] = {'R', 'S', 'I', 'C'};
  static constexpr std::uint8_t kVersion = 1;
  static constexpr std::size_t kBinarySize = 25;

  std::uint32_t q = 0;
  std::uint32_t k = 0;
  std::uint32_t alpha = 0;
  /// Symbol count before zero-padding the last block.
  std::uint64_t payload_len = 0;

  friend bool operator==(const StreamHeader&, const StreamHeader&) = default;
};

struct BlockStream {
  StreamHeader header;
  SymbolFormat format = SymbolFormat::Text;
  std::vector<Word> blocks;
};

/// Text: decimal tokens separated by whitespace. Binary: one byte per symbol.
/// Throws StreamError on a token that is not a non-negative integer.
std::vector<std::uint32_t> read_symbols(std::istream& in, SymbolFormat format);
/// Text output is single-space separated with one trailing newline (nothing
/// at all for an empty payload).
void write_symbols(std::ostream& out, std::span<const std::uint32_t> symbols, SymbolFormat format);

/// Throws InvalidField / InvalidCode for bad parameters.
Code code_for(const StreamHeader& header);

void write_stream(std::ostream& out, const BlockStream& stream);
/// Detects text vs binary from the byte after the magic. Validates the code
/// parameters, block lengths, symbol range and payload_len. Throws StreamError.
BlockStream read_stream(std::istream& in);

}  // namespace rsi
