#include "rsi/bench.hpp"

#include <chrono>
#include <cstdio>
#include <string>

#include "rsi/error.hpp"
#include "rsi/random.hpp"

namespace rsi {

namespace {

double mean(std::uint64_t total, std::size_t trials) {
  return trials == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(trials);
}

void validate(const TrialConfig& cfg) {
  if (cfg.trials_per_t < 1) throw ConfigInvalid("trials_per_t must be at least 1");
  for (std::size_t t : cfg.t_values) {
    if (t > cfg.code.tau()) {
      throw ConfigInvalid("error weight " + std::to_string(t) + " exceeds tau = " +
                          std::to_string(cfg.code.tau()));
    }
  }
}

}  // namespace

double TrialRow::rank_checks_mean() const { return mean(rank_checks_total, trials); }
double TrialRow::det_checks_mean() const { return mean(det_checks_total, trials); }
double TrialRow::mul_count_mean() const { return mean(mul_count_total, trials); }
double TrialRow::wall_ns_mean() const { return mean(wall_ns_total, trials); }

std::vector<std::size_t> full_sweep(const Code& code) {
  std::vector<std::size_t> ts;
  for (std::size_t t = 0; t <= code.tau(); ++t) ts.push_back(t);
  return ts;
}

TrialReport run_sweep(const TrialConfig& cfg) {
  validate(cfg);
  const Code& code = cfg.code;
  const std::size_t nt = cfg.t_values.size();

  TrialReport report;
  report.rows.resize(cfg.decoders.size() * nt);
  for (std::size_t d = 0; d < cfg.decoders.size(); ++d) {
    for (std::size_t j = 0; j < nt; ++j) {
      TrialRow& row = report.rows[d * nt + j];
      row.decoder = cfg.decoders[d];
      row.t = cfg.t_values[j];
    }
  }
  if (cfg.decoders.empty()) return report;

  for (std::size_t j = 0; j < nt; ++j) {
    for (std::size_t i = 0; i < cfg.trials_per_t; ++i) {
      Rng rng(cfg.seed ^ static_cast<std::uint64_t>(j * cfg.trials_per_t + i));
      const Word sent = encode(code, random_message(rng, code));
      const Word err = random_error(rng, code, cfg.t_values[j]);
      Word received(code.n());
      for (std::size_t p = 0; p < code.n(); ++p) received[p] = code.field().add(sent[p], err[p]);

      for (std::size_t d = 0; d < cfg.decoders.size(); ++d) {
        TrialRow& row = report.rows[d * nt + j];
        const auto start = std::chrono::steady_clock::now();
        const DecodeResult r = run_decoder(cfg.decoders[d], code, received);
        const auto stop = std::chrono::steady_clock::now();

        ++row.trials;
        if (r.ok() && r.codeword == sent) {
          ++row.successes;
        } else {
          ++row.failures;
        }
        row.rank_checks_total += r.trace.rank_checks;
        row.det_checks_total += r.trace.det_checks;
        row.mul_count_total += r.trace.mul_count;
        if (cfg.measure_time) {
          row.wall_ns_total += static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
        }
      }
    }
  }
  return report;
}

std::string report_to_json(const TrialReport& report) {
  std::string out;
  char buf[512];
  for (const TrialRow& row : report.rows) {
    const std::string name(to_string(row.decoder));
    std::snprintf(buf, sizeof buf,
                  "{\"decoder\":\"%s\",\"t\":%zu,\"trials\":%zu,\"successes\":%zu,"
                  "\"failures\":%zu,\"rank_checks_mean\":%.6f,\"det_checks_mean\":%.6f,"
                  "\"mul_count_mean\":%.6f,\"wall_ns_mean\":%.6f}\n",
                  name.c_str(), row.t, row.trials, row.successes, row.failures,
                  row.rank_checks_mean(), row.det_checks_mean(), row.mul_count_mean(),
                  row.wall_ns_mean());
    out += buf;
  }
  return out;
}

}  // namespace rsi
