#include "rsi/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "rsi/bench.hpp"
#include "rsi/decoder.hpp"
#include "rsi/error.hpp"
#include "rsi/random.hpp"
#include "rsi/stream.hpp"

namespace rsi::cli {

namespace {

// Failure carrying the process exit status.
struct Exit {
  int code;
  std::string message;
};

class Input {
 public:
  Input(const std::string& path, std::istream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_.open(path, std::ios::binary);
      if (!file_) throw Exit{kUsage, "cannot open input file " + path};
      stream_ = &file_;
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw Exit{kUsage, "cannot open output file " + path};
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

Code make_code(std::uint32_t q, std::size_t k, std::optional<std::uint32_t> alpha) {
  try {
    return Code::make(q, k, alpha ? std::optional<Fe>(Fe{*alpha}) : std::nullopt);
  } catch (const std::invalid_argument& e) {
    throw Exit{kUsage, e.what()};
  }
}

BlockStream load_stream(std::istream& in) {
  try {
    return read_stream(in);
  } catch (const StreamError& e) {
    throw Exit{kBadInput, e.what()};
  }
}

// Message symbols carried by a length-n word: the low k coefficients of its
// interpolation polynomial (exact for codewords).
std::vector<std::uint32_t> message_of(const Code& code, const Word& w) {
  const Poly p = interpolate(code, w);
  std::vector<std::uint32_t> msg(code.k());
  for (std::size_t i = 0; i < code.k(); ++i) msg[i] = p.coeff(i).value;
  return msg;
}

struct EncodeArgs {
  std::uint32_t q = 0;
  std::size_t k = 0;
  std::optional<std::uint32_t> alpha;
  std::string in = "-";
  std::string out = "-";
  std::string format = "text";
};

int cmd_encode(const EncodeArgs& a, std::istream& stdin_, std::ostream& stdout_) {
  const Code code = make_code(a.q, a.k, a.alpha);
  const SymbolFormat format = a.format == "bin" ? SymbolFormat::Binary : SymbolFormat::Text;
  if (format == SymbolFormat::Binary && code.field().order() > 256) {
    throw Exit{kUsage, "binary format requires q <= 256"};
  }

  Input in(a.in, stdin_);
  std::vector<std::uint32_t> symbols;
  try {
    symbols = read_symbols(in.get(), format);
  } catch (const StreamError& e) {
    throw Exit{kBadInput, e.what()};
  }

  BlockStream stream;
  stream.format = format;
  stream.header = {code.field().order(), static_cast<std::uint32_t>(code.k()),
                   code.field().alpha().value, symbols.size()};
  for (std::size_t start = 0; start < symbols.size(); start += code.k()) {
    Word msg(code.k(), Fe{0});
    for (std::size_t i = 0; i < code.k() && start + i < symbols.size(); ++i) {
      const std::uint32_t s = symbols[start + i];
      if (!code.field().contains(s)) {
        throw Exit{kBadInput, "symbol " + std::to_string(s) + " at offset " +
                                  std::to_string(start + i) + " is not in F_" +
                                  std::to_string(code.field().order())};
      }
      msg[i] = Fe{s};
    }
    stream.blocks.push_back(encode(code, msg));
  }

  Output out(a.out, stdout_);
  write_stream(out.get(), stream);
  return kOk;
}

struct DecodeArgs {
  std::string decoder = "interp";
  std::string in = "-";
  std::string out = "-";
  std::string stats;
  bool strict = false;
};

int cmd_decode(const DecodeArgs& a, std::istream& stdin_, std::ostream& stdout_) {
  const std::optional<DecoderKind> kind = parse_decoder(a.decoder);
  if (!kind) throw Exit{kUsage, "unknown decoder " + a.decoder};

  Input in(a.in, stdin_);
  const BlockStream stream = load_stream(in.get());
  const Code code = code_for(stream.header);

  std::unique_ptr<Output> stats;
  if (!a.stats.empty()) stats = std::make_unique<Output>(a.stats, stdout_);

  std::vector<std::uint32_t> payload;
  payload.reserve(stream.blocks.size() * code.k());
  std::size_t failed = 0;
  for (std::size_t b = 0; b < stream.blocks.size(); ++b) {
    const DecodeResult r = run_decoder(*kind, code, stream.blocks[b]);
    const Word& word = r.ok() ? r.codeword : stream.blocks[b];
    const auto msg = message_of(code, word);
    payload.insert(payload.end(), msg.begin(), msg.end());
    if (!r.ok()) ++failed;
    if (stats) {
      stats->get() << "{\"block\":" << b << ",\"outcome\":\"" << to_string(r.error)
                   << "\",\"t\":" << r.t << ",\"rank_checks\":" << r.trace.rank_checks
                   << ",\"det_checks\":" << r.trace.det_checks
                   << ",\"mul_count\":" << r.trace.mul_count << "}\n";
    }
  }
  if (a.strict && failed != 0) {
    throw Exit{kUncorrectable, std::to_string(failed) + " block(s) could not be corrected"};
  }

  payload.resize(static_cast<std::size_t>(stream.header.payload_len));
  Output out(a.out, stdout_);
  write_symbols(out.get(), payload, stream.format);
  return kOk;
}

struct CorruptArgs {
  std::size_t errors = 0;
  std::uint64_t seed = 0;
  std::string in = "-";
  std::string out = "-";
};

int cmd_corrupt(const CorruptArgs& a, std::istream& stdin_, std::ostream& stdout_) {
  Input in(a.in, stdin_);
  BlockStream stream = load_stream(in.get());
  const Code code = code_for(stream.header);
  if (a.errors >= code.n()) {
    throw Exit{kUsage, "--errors must be below the block length " + std::to_string(code.n())};
  }
  for (std::size_t b = 0; b < stream.blocks.size(); ++b) {
    Rng rng(a.seed ^ static_cast<std::uint64_t>(b));
    const Word e = random_error(rng, code, a.errors);
    for (std::size_t i = 0; i < code.n(); ++i) {
      stream.blocks[b][i] = code.field().add(stream.blocks[b][i], e[i]);
    }
  }
  Output out(a.out, stdout_);
  write_stream(out.get(), stream);
  return kOk;
}

struct CompareArgs {
  std::uint32_t q = 0;
  std::size_t k = 0;
  std::optional<std::uint32_t> alpha;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool timing = false;
};

int cmd_compare(const CompareArgs& a, std::ostream& stdout_) {
  if (a.trials < 1) throw Exit{kUsage, "--trials must be at least 1"};
  const Code code = make_code(a.q, a.k, a.alpha);
  TrialConfig cfg{code,
                  full_sweep(code),
                  a.trials,
                  a.seed,
                  {DecoderKind::Interp, DecoderKind::InterpPositions, DecoderKind::Pgz},
                  a.timing};
  stdout_ << report_to_json(run_sweep(cfg));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Reed-Solomon codec with interpolation and PGZ decoders", "rsi"};
  app.require_subcommand(1);

  EncodeArgs enc;
  auto* encode_cmd = app.add_subcommand("encode", "Encode a symbol stream into RS blocks");
  encode_cmd->add_option("--q", enc.q, "Field order (prime or power of two)")->required();
  encode_cmd->add_option("--k", enc.k, "Code dimension")->required();
  encode_cmd->add_option("--alpha", enc.alpha, "Primitive element (default: smallest)");
  encode_cmd->add_option("--in", enc.in, "Input symbols ('-' for stdin)");
  encode_cmd->add_option("--out", enc.out, "Output stream ('-' for stdout)");
  encode_cmd->add_option("--format", enc.format, "Symbol format")
      ->check(CLI::IsMember({"text", "bin"}));

  DecodeArgs dec;
  auto* decode_cmd = app.add_subcommand("decode", "Decode an RS block stream");
  decode_cmd->add_option("--decoder", dec.decoder, "interp | interp-pos | pgz")
      ->check(CLI::IsMember({"interp", "interp-pos", "interp_positions", "pgz"}));
  decode_cmd->add_option("--in", dec.in, "Input stream ('-' for stdin)");
  decode_cmd->add_option("--out", dec.out, "Recovered symbols ('-' for stdout)");
  decode_cmd->add_option("--stats", dec.stats, "Per-block JSON-lines statistics path");
  decode_cmd->add_flag("--strict", dec.strict, "Exit 4 if any block is uncorrectable");

  CorruptArgs cor;
  auto* corrupt_cmd = app.add_subcommand("corrupt", "Add exact-weight random errors per block");
  corrupt_cmd->add_option("--errors", cor.errors, "Errors per block")->required();
  corrupt_cmd->add_option("--seed", cor.seed, "RNG seed");
  corrupt_cmd->add_option("--in", cor.in, "Input stream ('-' for stdin)");
  corrupt_cmd->add_option("--out", cor.out, "Output stream ('-' for stdout)");

  CompareArgs cmp;
  auto* compare_cmd = app.add_subcommand("compare", "Sweep error weights over all decoders");
  compare_cmd->add_option("--q", cmp.q, "Field order")->required();
  compare_cmd->add_option("--k", cmp.k, "Code dimension")->required();
  compare_cmd->add_option("--alpha", cmp.alpha, "Primitive element (default: smallest)");
  compare_cmd->add_option("--trials", cmp.trials, "Trials per error weight");
  compare_cmd->add_option("--seed", cmp.seed, "RNG seed");
  compare_cmd->add_flag("--timing", cmp.timing, "Measure wall time (output not reproducible)");

  std::vector<const char*> argv{"rsi"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*encode_cmd) return cmd_encode(enc, in, out);
    if (*decode_cmd) return cmd_decode(dec, in, out);
    if (*corrupt_cmd) return cmd_corrupt(cor, in, out);
    if (*compare_cmd) return cmd_compare(cmp, out);
  } catch (const Exit& e) {
    err << "rsi: " << e.message << '\n';
    return e.code;
  }
  return kUsage;
}

}  // namespace rsi::cli
