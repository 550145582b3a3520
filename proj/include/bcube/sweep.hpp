#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bcube/topology.hpp"

namespace bcube {

enum class SweepMode { Dpc, HamPath };

struct SweepConfig {
  std::vector<Dims> dims;
  std::vector<double> fills{1.0};
  int instances = 1;            // fault sets per (dims, fill); instance i uses seed + i
  int quads = 10;               // random endpoint sets per fault set
  bool all_quads = false;       // enumerate every ordered quadruple (or pair) instead
  std::uint64_t seed = 1;
  SweepMode mode = SweepMode::Dpc;
  int jobs = 1;
  bool timing = true;           // omit "elapsed_ms" for byte-stable output
};

struct SweepSummary {
  std::uint64_t trials = 0;
  std::uint64_t verified = 0;
  std::uint64_t failed() const { return trials - verified; }
};

/// Runs every trial of the matrix and writes one JSON record per line, in
/// trial order, to out (when non-null). Throws std::invalid_argument for a
/// config with n < 4 or an empty matrix.
SweepSummary run_sweep(const SweepConfig& config, std::ostream* out);

}  // namespace bcube
