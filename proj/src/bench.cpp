#include "sepq/bench.hpp"

#include <chrono>
#include <vector>

#include "sepq/full_separability.hpp"
#include "sepq/random.hpp"

namespace sepq::bench {

CheckFullRow check_full(int n, int reps, std::uint64_t seed) {
  const std::vector<int> blocks(static_cast<std::size_t>(n), 1);
  const PureState state = random_structured_state(blocks, seed);

  CheckFullRow row;
  row.n = n;
  row.amplitudes = state.size();
  FullSepReport report = is_fully_separable(state);  // warm-up

  using clock = std::chrono::steady_clock;
  std::chrono::nanoseconds total{0};
  for (int i = 0; i < reps; ++i) {
    const auto start = clock::now();
    report = is_fully_separable(state);
    total += std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start);
  }
  row.mean_ns = reps > 0 ? static_cast<double>(total.count()) / reps : 0.0;
  row.products = report.counters.products;
  row.pair_comparisons = report.counters.pair_comparisons;
  row.wf_comparisons = report.counters.wf_comparisons;
  row.separable = report.separable;
  return row;
}

}  // namespace sepq::bench
