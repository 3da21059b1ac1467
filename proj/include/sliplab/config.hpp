#pragma once

#include <cstdint>

namespace sliplab {

// Default ceiling on raw field points an enumeration may visit (p^dim for a
// vector scan, subspace counts for lattice scans).  Policy knob, not math.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

enum class OutputMode { text, json };

// Execution knobs threaded through every enumeration-backed engine.
// `projective_reduction = false` forces full nonzero-vector scans; it exists
// so tests can confirm the projective shortcut changes nothing.
struct RunConfig {
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  bool early_stop = true;
  bool projective_reduction = true;
  OutputMode output_mode = OutputMode::text;
};

}  // namespace sliplab
