#pragma once

#include <cstdint>

#include "symcert/json_io.hpp"

namespace symcert {

struct ReportConfig {
  int n_max = 8;
  std::uint64_t seed = 1;
  /// Random samples per (n, k) for the sample verification sections.
  std::uint64_t samples = 200;
  /// Sampled sections cover n <= min(n_max, sample_n_max).
  int sample_n_max = 8;
  unsigned threads = 1;
};

/// One reproducible document: theta table, certificate constants, lemma
/// scan, the counterexample to the general combination inequality, and
/// sampled verification summaries. Identical configs give identical output
/// regardless of thread count.
json::Json report_bundle(const ReportConfig& config);

}  // namespace symcert
