#include "rsi/stream.hpp"

#include <charconv>
#include <cstring>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace rsi {

namespace {

template <typename T>
void put_le(std::ostream& out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
}

template <typename T>
T get_le(const unsigned char* p) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(p[i]) << (8 * i);
  return v;
}

std::uint64_t parse_uint(const std::string& tok) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw StreamError("not a non-negative integer: '" + tok + "'");
  }
  return v;
}

std::uint32_t parse_u32(const std::string& tok) {
  const std::uint64_t v = parse_uint(tok);
  if (v > UINT32_MAX) throw StreamError("value out of range: " + tok);
  return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> read_text_tokens(std::istream& in) {
  std::vector<std::uint32_t> out;
  std::string tok;
  while (in >> tok) out.push_back(parse_u32(tok));
  return out;
}

}  // namespace

std::vector<std::uint32_t> read_symbols(std::istream& in, SymbolFormat format) {
  if (format == SymbolFormat::Text) return read_text_tokens(in);
  std::vector<std::uint32_t> out;
  for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
    out.push_back(static_cast<unsigned char>(*it));
  }
  return out;
}

void write_symbols(std::ostream& out, std::span<const std::uint32_t> symbols, SymbolFormat format) {
  if (format == SymbolFormat::Binary) {
    for (std::uint32_t s : symbols) out.put(static_cast<char>(s & 0xFF));
    return;
  }
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i != 0) out << ' ';
    out << symbols[i];
  }
  if (!symbols.empty()) out << '\n';
}

Code code_for(const StreamHeader& header) {
  return Code::make(header.q, header.k, Fe{header.alpha});
}

void write_stream(std::ostream& out, const BlockStream& stream) {
  const StreamHeader& h = stream.header;
  if (stream.format == SymbolFormat::Binary) {
    out.write(StreamHeader::kMagic, 4);
    out.put(static_cast<char>(StreamHeader::kVersion));
    put_le(out, h.q);
    put_le(out, h.k);
    put_le(out, h.alpha);
    put_le(out, h.payload_len);
    for (const Word& block : stream.blocks) {
      for (Fe s : block) out.put(static_cast<char>(s.value & 0xFF));
    }
    return;
  }
  out.write(StreamHeader::kMagic, 4);
  out << ' ' << static_cast<unsigned>(StreamHeader::kVersion) << ' ' << h.q << ' ' << h.k << ' '
      << h.alpha << ' ' << h.payload_len << '\n';
  for (const Word& block : stream.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i != 0) out << ' ';
      out << block[i].value;
    }
    out << '\n';
  }
}

BlockStream read_stream(std::istream& in) {
  char magic[5] = {};
  if (!in.read(magic, 5) || std::memcmp(magic, StreamHeader::kMagic, 4) != 0) {
    throw StreamError("missing RSIC stream header");
  }

  BlockStream stream;
  std::vector<std::uint32_t> symbols;
  if (static_cast<unsigned char>(magic[4]) == StreamHeader::kVersion) {
    stream.format = SymbolFormat::Binary;
    unsigned char rest[StreamHeader::kBinarySize - 5];
    if (!in.read(reinterpret_cast<char*>(rest), sizeof rest)) {
      throw StreamError("truncated binary header");
    }
    stream.header.q = get_le<std::uint32_t>(rest);
    stream.header.k = get_le<std::uint32_t>(rest + 4);
    stream.header.alpha = get_le<std::uint32_t>(rest + 8);
    stream.header.payload_len = get_le<std::uint64_t>(rest + 12);
    symbols = read_symbols(in, SymbolFormat::Binary);
  } else if (magic[4] == ' ') {
    stream.format = SymbolFormat::Text;
    std::string line;
    std::getline(in, line);
    std::istringstream fields(line);
    std::string version, q, k, alpha, len, extra;
    if (!(fields >> version >> q >> k >> alpha >> len) || (fields >> extra)) {
      throw StreamError("malformed text header");
    }
    if (parse_uint(version) != StreamHeader::kVersion) throw StreamError("unsupported version");
    stream.header.q = parse_u32(q);
    stream.header.k = parse_u32(k);
    stream.header.alpha = parse_u32(alpha);
    stream.header.payload_len = parse_uint(len);
    symbols = read_text_tokens(in);
  } else {
    throw StreamError("unrecognized stream format");
  }

  std::optional<Code> code;
  try {
    code.emplace(code_for(stream.header));
  } catch (const std::invalid_argument& e) {
    throw StreamError(std::string("invalid code parameters in header: ") + e.what());
  }
  if (stream.format == SymbolFormat::Binary && code->field().order() > 256) {
    throw StreamError("binary streams require q <= 256");
  }

  const std::size_t n = code->n();
  if (symbols.size() % n != 0) {
    throw StreamError("stream body is not a whole number of " + std::to_string(n) +
                      "-symbol blocks");
  }
  const std::size_t blocks = symbols.size() / n;
  if (stream.header.payload_len > static_cast<std::uint64_t>(blocks) * code->k()) {
    throw StreamError("payload_len exceeds the capacity of the blocks present");
  }
  stream.blocks.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t s = symbols[b * n + i];
      if (!code->field().contains(s)) {
        throw StreamError("symbol " + std::to_string(s) + " is not in F_" +
                          std::to_string(code->field().order()));
      }
      w[i] = Fe{s};
    }
    stream.blocks.push_back(std::move(w));
  }
  return stream;
}

}  // namespace rsi
