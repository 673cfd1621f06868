#include "rsi/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rsi/random.hpp"
#include "rsi/stream.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult rsi_run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = rsi::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::string& s) {
  std::ofstream f(p, std::ios::binary);
  f << s;
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rsi_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* kToyStream = "RSIC 1 7 2 5 6\n2 6 5 0 3 4\n2 3 1 5 4 6\n4 0 1 6 3 2\n";

}  // namespace

TEST(CliEncode, ToyBlocks) {
  const RunResult r = rsi_run({"encode", "--q", "7", "--k", "2", "--alpha", "5"}, "1 1 0 2 5 6");
  EXPECT_EQ(r.code, rsi::cli::kOk) << r.err;
  EXPECT_EQ(r.out, kToyStream);
}

TEST(CliEncode, PaddingAndEmpty) {
  RunResult r = rsi_run({"encode", "--q", "7", "--k", "2", "--alpha", "5"}, "1 1 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "RSIC 1 7 2 5 3\n2 6 5 0 3 4\n0 0 0 0 0 0\n");

  r = rsi_run({"encode", "--q", "7", "--k", "2", "--alpha", "5"}, "");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "RSIC 1 7 2 5 0\n");

  r = rsi_run({"decode"}, r.out);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");

  r = rsi_run({"encode", "--q", "7", "--k", "2"}, "1 1");
  EXPECT_EQ(r.out.substr(0, 15), "RSIC 1 7 2 3 2\n");
}

TEST(CliEncode, BinaryHeader) {
  const RunResult r = rsi_run({"encode", "--q", "7", "--k", "2", "--alpha", "5", "--format", "bin"},
                        std::string("\x01\x01\x00", 3));
  ASSERT_EQ(r.code, 0);
  ASSERT_EQ(r.out.size(), 25u + 12u);
  const std::string expect_header("RSIC\x01\x07\0\0\0\x02\0\0\0\x05\0\0\0\x03\0\0\0\0\0\0\0", 25);
  EXPECT_EQ(r.out.substr(0, 25), expect_header);
  EXPECT_EQ(r.out.substr(25, 6), std::string("\x02\x06\x05\x00\x03\x04", 6));
}

TEST(CliEncode, ExitCodes) {
  EXPECT_EQ(rsi_run({"encode", "--q", "6", "--k", "2"}).code, rsi::cli::kUsage);
  EXPECT_EQ(rsi_run({"encode", "--q", "7", "--k", "6"}).code, rsi::cli::kUsage);
  EXPECT_EQ(rsi_run({"encode", "--q", "7", "--k", "2", "--alpha", "2"}).code, rsi::cli::kUsage);
  EXPECT_EQ(rsi_run({"encode", "--q", "257", "--k", "2", "--format", "bin"}).code, rsi::cli::kUsage);
  EXPECT_EQ(rsi_run({"encode", "--q", "7", "--k", "2", "--format", "hex"}).code, rsi::cli::kUsage);
  EXPECT_EQ(rsi_run({"encode", "--k", "2"}).code, rsi::cli::kUsage);
  EXPECT_EQ(rsi_run({}).code, rsi::cli::kUsage);
  EXPECT_EQ(rsi_run({"frobnicate"}).code, rsi::cli::kUsage);
  EXPECT_EQ(rsi_run({"encode", "--q", "7", "--k", "2", "--in", "/nonexistent/x"}).code,
            rsi::cli::kUsage);

  RunResult r = rsi_run({"encode", "--q", "7", "--k", "2"}, "1 7");
  EXPECT_EQ(r.code, rsi::cli::kBadInput);
  EXPECT_NE(r.err.find("7"), std::string::npos);
  EXPECT_EQ(rsi_run({"encode", "--q", "7", "--k", "2"}, "1 x").code, rsi::cli::kBadInput);
  EXPECT_EQ(rsi_run({"encode", "--q", "7", "--k", "2", "--format", "bin"}, "\x09").code,
            rsi::cli::kBadInput);
  EXPECT_EQ(rsi_run({"--help"}).code, rsi::cli::kOk);
}

TEST(CliDecode, CorrectsToyBlock) {
  const std::string stream = "RSIC 1 7 2 5 2\n4 2 1 6 3 2\n";
  for (const char* d : {"interp", "interp-pos", "pgz"}) {
    const RunResult r = rsi_run({"decode", "--decoder", d}, stream);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "5 6\n") << d;
  }
  EXPECT_EQ(rsi_run({"decode"}, kToyStream).out, "1 1 0 2 5 6\n");
  EXPECT_EQ(rsi_run({"decode", "--decoder", "bm"}, kToyStream).code, rsi::cli::kUsage);
}

TEST_F(CliFiles, DecodeStats) {
  const std::string stream = "RSIC 1 7 2 5 4\n4 2 1 6 3 2\n2 6 5 0 3 4\n";
  const RunResult r = rsi_run({"decode", "--stats", path("stats.jsonl")}, stream);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5 6 1 1\n");
  std::istringstream lines(slurp(path("stats.jsonl")));
  std::string line;
  std::vector<nlohmann::json> rows;
  while (std::getline(lines, line)) rows.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0]["block"], 0);
  EXPECT_EQ(rows[0]["t"], 1);
  EXPECT_EQ(rows[0]["outcome"], "ok");
  EXPECT_EQ(rows[0]["rank_checks"], 2);
  EXPECT_EQ(rows[1]["t"], 0);
  EXPECT_EQ(rows[1]["rank_checks"], 1);
}

TEST_F(CliFiles, StrictUncorrectable) {
  // 265034 with three symbols changed; the nearest codeword is 3 away.
  const std::string stream = "RSIC 1 7 2 5 4\n3 0 6 0 3 4\n2 6 5 0 3 4\n";
  RunResult r = rsi_run({"decode", "--strict"}, stream);
  EXPECT_EQ(r.code, rsi::cli::kUncorrectable);
  EXPECT_EQ(r.out, "");

  r = rsi_run({"decode", "--stats", path("s.jsonl")}, stream);
  EXPECT_EQ(r.code, 0);
  const std::string stats = slurp(path("s.jsonl"));
  const auto first = nlohmann::json::parse(stats.substr(0, stats.find('\n')));
  EXPECT_NE(first["outcome"], "ok");
  // The failed block passes through uncorrected; the clean one decodes.
  EXPECT_EQ(r.out.substr(r.out.size() - 4), "1 1\n");
}

TEST(CliDecode, BadStreams) {
  EXPECT_EQ(rsi_run({"decode"}, "").code, rsi::cli::kBadInput);
  EXPECT_EQ(rsi_run({"decode"}, "RSIX 1 7 2 5 2\n").code, rsi::cli::kBadInput);
  EXPECT_EQ(rsi_run({"decode"}, "RSIC 2 7 2 5 2\n").code, rsi::cli::kBadInput);
  EXPECT_EQ(rsi_run({"decode"}, "RSIC 1 7 2 2 2\n2 6 5 0 3 4\n").code, rsi::cli::kBadInput);
  EXPECT_EQ(rsi_run({"decode"}, "RSIC 1 7 2 5 2\n2 6 5 0 3\n").code, rsi::cli::kBadInput);
  EXPECT_EQ(rsi_run({"decode"}, "RSIC 1 7 2 5 3\n2 6 5 0 3 4\n").code, rsi::cli::kBadInput);
  EXPECT_EQ(rsi_run({"decode"}, "RSIC 1 7 2 5 2\n2 6 5 0 3 9\n").code, rsi::cli::kBadInput);
  EXPECT_EQ(rsi_run({"decode"}, std::string("RSIC\x01\x07\0\0", 8)).code, rsi::cli::kBadInput);
}

TEST(CliCorrupt, ZeroErrorsIsIdentity) {
  const RunResult r = rsi_run({"corrupt", "--errors", "0", "--seed", "3"}, kToyStream);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, kToyStream);
}

TEST(CliCorrupt, ReproducibleExactWeight) {
  const RunResult a = rsi_run({"corrupt", "--errors", "2", "--seed", "77"}, kToyStream);
  const RunResult b = rsi_run({"corrupt", "--errors", "2", "--seed", "77"}, kToyStream);
  const RunResult c = rsi_run({"corrupt", "--errors", "2", "--seed", "78"}, kToyStream);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  std::istringstream orig(kToyStream), bad(a.out);
  const auto s0 = rsi::read_stream(orig);
  const auto s1 = rsi::read_stream(bad);
  ASSERT_EQ(s0.header, s1.header);
  for (std::size_t b = 0; b < s0.blocks.size(); ++b) {
    std::size_t diff = 0;
    for (std::size_t i = 0; i < 6; ++i) diff += s0.blocks[b][i] != s1.blocks[b][i];
    EXPECT_EQ(diff, 2u);
  }
  EXPECT_EQ(rsi_run({"decode"}, a.out).out, "1 1 0 2 5 6\n");
}

TEST(CliCorrupt, ExitCodes) {
  EXPECT_EQ(rsi_run({"corrupt", "--errors", "6"}, kToyStream).code, rsi::cli::kUsage);
  EXPECT_EQ(rsi_run({"corrupt", "--seed", "1"}, kToyStream).code, rsi::cli::kUsage);
  EXPECT_EQ(rsi_run({"corrupt", "--errors", "1"}, "garbage").code, rsi::cli::kBadInput);
}

TEST(CliCompare, ToyRows) {
  const RunResult r = rsi_run({"compare", "--q", "7", "--k", "2", "--trials", "100", "--seed", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<nlohmann::json> rows;
  while (std::getline(lines, line)) rows.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows[0]["decoder"], "interp");
  EXPECT_EQ(rows[0]["rank_checks_mean"], 1.0);
  EXPECT_EQ(rows[2]["rank_checks_mean"], 3.0);
  EXPECT_EQ(rows[6]["decoder"], "pgz");
  EXPECT_EQ(rows[6]["det_checks_mean"], 0.0);
  EXPECT_EQ(rows[8]["det_checks_mean"], 1.0);
  for (const auto& row : rows) EXPECT_EQ(row["failures"], 0);
}

TEST(CliCompare, DeterministicAndDegenerate) {
  const std::vector<std::string> args{"compare", "--q", "11", "--k", "3", "--trials", "1", "--seed", "9"};
  EXPECT_EQ(rsi_run(args).out, rsi_run(args).out);
  const RunResult r = rsi_run({"compare", "--q", "7", "--k", "5", "--trials", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_EQ(rsi_run({"compare", "--q", "7", "--k", "6"}).code, rsi::cli::kUsage);
  EXPECT_EQ(rsi_run({"compare", "--q", "7", "--k", "2", "--trials", "0"}).code, rsi::cli::kUsage);
}

// encode -> corrupt (t <= tau) -> decode is the identity on random payloads,
// for every decoder and both symbol formats.
TEST_F(CliFiles, EndToEndRandomFiles) {
  rsi::Rng rng(2024);
  const std::vector<std::uint32_t> orders{5, 7, 11, 13, 16, 17, 32, 256};
  const char* decoders[] = {"interp", "interp-pos", "pgz"};
  for (int file = 0; file < 120; ++file) {
    const std::uint32_t q = orders[rng.below(orders.size())];
    const std::size_t k = 1 + rng.below(q - 3);
    const std::size_t tau = (q - 1 - k) / 2;
    const bool binary = rng.below(2) == 1;
    const std::size_t len = rng.below(40);

    std::vector<std::uint32_t> symbols(len);
    for (auto& s : symbols) s = static_cast<std::uint32_t>(rng.below(q));
    std::ostringstream ps;
    rsi::write_symbols(ps, symbols, binary ? rsi::SymbolFormat::Binary : rsi::SymbolFormat::Text);
    const std::string payload = ps.str();
    spit(path("payload"), payload);

    const std::string fmt = binary ? "bin" : "text";
    const std::string errors = std::to_string(rng.below(tau + 1));
    const std::string seed = std::to_string(rng.next());
    ASSERT_EQ(rsi_run({"encode", "--q", std::to_string(q), "--k", std::to_string(k), "--format", fmt,
                       "--in", path("payload"), "--out", path("enc")})
                  .code,
              0);
    ASSERT_EQ(rsi_run({"corrupt", "--errors", errors, "--seed", seed, "--in", path("enc"), "--out",
                       path("bad")})
                  .code,
              0);
    const char* d = decoders[file % 3];
    const RunResult r = rsi_run({"decode", "--decoder", d, "--strict", "--in", path("bad"), "--out",
                           path("dec")});
    ASSERT_EQ(r.code, 0) << "q=" << q << " k=" << k << " " << d << ": " << r.err;
    ASSERT_EQ(slurp(path("dec")), payload) << "q=" << q << " k=" << k << " " << d;
  }
}

TEST(CliFormats, TextAndBinaryAgree) {
  rsi::Rng rng(99);
  for (std::uint32_t q : {7u, 16u, 256u}) {
    std::vector<std::uint32_t> symbols(50);
    for (auto& s : symbols) s = static_cast<std::uint32_t>(rng.below(q));
    std::ostringstream text, bin;
    rsi::write_symbols(text, symbols, rsi::SymbolFormat::Text);
    rsi::write_symbols(bin, symbols, rsi::SymbolFormat::Binary);
    const std::vector<std::string> base{"--q", std::to_string(q), "--k", "3"};
    auto enc_args = [&](const std::string& fmt) {
      std::vector<std::string> a{"encode"};
      a.insert(a.end(), base.begin(), base.end());
      a.push_back("--format");
      a.push_back(fmt);
      return a;
    };
    const RunResult et = rsi_run(enc_args("text"), text.str());
    const RunResult eb = rsi_run(enc_args("bin"), bin.str());
    std::istringstream st(et.out), sb(eb.out);
    const auto a = rsi::read_stream(st);
    const auto b = rsi::read_stream(sb);
    EXPECT_EQ(a.header, b.header);
    EXPECT_EQ(a.blocks, b.blocks);
    EXPECT_EQ(rsi_run({"decode"}, et.out).out, text.str());
    EXPECT_EQ(rsi_run({"decode"}, eb.out).out, bin.str());
  }
}
