#pragma once

// Peterson-Gorenstein-Zierler decoding on the same primitives as the
// interpolation decoder: a descending determinant scan for the error count,
// the same locator system, root search for positions and a t x t system for
// the error values.

#include <span>

#include "rsi/decoder.hpp"

namespace rsi {

/// Zero syndromes give t = 0 without any determinant. Otherwise scans
/// h = tau, tau-1, ..., 1 and returns the first h with det [s_(i+j+1)]_hxh != 0.
/// Every determinant is recomputed from scratch.
Detection pgz_detect_t(const Code& code, const Syndromes& s);

DecodeResult pgz_decode(const Code& code, std::span<const Fe> received);

}  // namespace rsi
