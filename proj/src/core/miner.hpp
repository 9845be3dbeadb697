#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/inequalities.hpp"

namespace opconv {

// A gap eigenvalue more negative than -kViolationScale * (1 + gap_norm)
// counts as a genuine violation (two orders of margin over the PSD
// certification tolerance).
inline constexpr double kViolationScale = 1e-6;

// Concrete witness that the divergence lower bound fails for a function:
// recomputing theorem1_gap on (a, b, c, f) reproduces min_gap_eigenvalue.
struct CounterexampleRecord {
  HermitianMatrix a;
  HermitianMatrix b;
  double c;
  std::string function_name;
  double min_gap_eigenvalue;  // < 0
  std::int64_t trial_index;
};

struct MinerOptions {
  int trials = 500;
  std::uint64_t seed = 0;
  std::vector<int> dims = {1, 2, 3, 4};
  std::vector<double> c_grid = {0.1, 0.25, 0.4, 0.6, 0.75, 0.9};
  double eigen_floor = 0.05;
  double scale = 1.0;
};

// Scalar values swept before any random matrix trial; the cheapest
// witnesses are dimension-free.
const std::vector<double>& miner_scalar_grid();

// Randomized search for violations of the divergence lower bound. A scalar
// grid sweep over (a, b, c) runs first, then `trials` seeded random matrix
// instances. The deepest violation is refined by coordinate descent and
// returned; absent when nothing falls below the violation threshold. The
// whole run is a pure function of (f, options).
std::optional<CounterexampleRecord> mine_counterexample(const FunctionDescriptor& f,
                                                        const MinerOptions& opts);

}  // namespace opconv
