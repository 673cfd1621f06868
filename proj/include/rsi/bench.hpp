#pragma once

// Trial runner comparing decoder cost against the true error weight.
//
// Cost is counted, not timed: rank comparisons, determinant evaluations and
// field multiplications per decode. Wall time is optional because it breaks
// report determinism.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rsi/decoder.hpp"
#include "rsi/rscode.hpp"

namespace rsi {

struct TrialConfig {
  Code code;
  /// Error weights to sweep; each must be <= tau.
  std::vector<std::size_t> t_values;
  std::size_t trials_per_t = 1;
  std::uint64_t seed = 0;
  std::vector<DecoderKind> decoders;
  bool measure_time = false;
};

struct TrialRow {
  DecoderKind decoder = DecoderKind::Interp;
  std::size_t t = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t failures = 0;
  std::uint64_t rank_checks_total = 0;
  std::uint64_t det_checks_total = 0;
  std::uint64_t mul_count_total = 0;
  std::uint64_t wall_ns_total = 0;

  double rank_checks_mean() const;
  double det_checks_mean() const;
  double mul_count_mean() const;
  double wall_ns_mean() const;
};

struct TrialReport {
  /// Decoder-major, then ascending t, in config order.
  std::vector<TrialRow> rows;
};

/// All t in [0, tau].
std::vector<std::size_t> full_sweep(const Code& code);

/// Trial i of the j-th weight uses Rng(seed ^ (j * trials_per_t + i)) for a
/// random message and an exact-weight error; every selected decoder sees the
/// same corrupted word. Throws ConfigInvalid.
TrialReport run_sweep(const TrialConfig& cfg);

/// One JSON object per row, newline terminated, keys in the fixed order
/// decoder, t, trials, successes, failures, rank_checks_mean, det_checks_mean,
/// mul_count_mean, wall_ns_mean. Means carry exactly six fractional digits.
std::string report_to_json(const TrialReport& report);

}  // namespace rsi
