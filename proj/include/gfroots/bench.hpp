#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "gfroots/ops.hpp"

namespace gfroots {

/// Relative costs used to turn predicted operation counts into a ratio.
struct CostWeights {
  double add = 1.0;
  double mul = 1.0;
  double exp = 1.0;

  double cost(const OpCounts& c) const noexcept {
    return add * static_cast<double>(c.adds) +
           mul * static_cast<double>(c.muls) +
           exp * static_cast<double>(c.exps);
  }
};

struct BenchRow {
  std::size_t degree = 0;
  /// Mean microseconds for one full-field evaluation.
  double chien_us = 0.0;
  double fast_us = 0.0;
  double speedup = 0.0;
  double predicted_ratio = 0.0;
  /// Roots found by each method summed over all trials; equal when the
  /// methods agree, and keeps the timed loops observable.
  std::uint64_t chien_roots = 0;
  std::uint64_t fast_roots = 0;
};

struct BenchConfig {
  unsigned m = 8;
  std::vector<std::size_t> degrees{6, 7, 8, 9, 10, 11, 16, 24, 32};
  std::size_t trials = 1000;
  /// Timed passes over the same polynomials; see run_benchmark.
  std::size_t passes = 5;
  std::uint64_t seed = 1;
  CostWeights weights;
};

/// Times both methods over `trials` seeded random polynomials per degree.
/// Polynomial generation is outside the timed region; the fast method's
/// decomposition and table precomputation are inside it. The trials are
/// split into short chunks; every pass times both methods back to back on
/// each chunk, and the reported mean sums each chunk's fastest pass. This
/// keeps the estimate a per-trial mean while filtering scheduler noise.
/// Throws Error{BadSpec} for an invalid m, empty or zero degrees, or
/// trials == 0 or passes == 0.
std::vector<BenchRow> run_benchmark(const BenchConfig& config);

void write_text_table(std::ostream& os, std::span<const BenchRow> rows);
/// One JSON object per line.
void write_machine_records(std::ostream& os, std::span<const BenchRow> rows);

}  // namespace gfroots
