#pragma once

#include <cstdint>

namespace sepq::bench {

struct CheckFullRow {
  int n = 0;
  std::uint64_t amplitudes = 0;
  double mean_ns = 0.0;
  std::uint64_t products = 0;
  std::uint64_t pair_comparisons = 0;
  std::uint64_t wf_comparisons = 0;
  bool separable = false;
};

// Times is_fully_separable on a random full-support product state of n
// qubits (the worst case for the pair-product test). One untimed warm-up
// call precedes `reps` timed calls.
CheckFullRow check_full(int n, int reps, std::uint64_t seed = 1);

}  // namespace sepq::bench
