#include "sepq/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>

#include "sepq/error.hpp"
#include "sepq/pq_separability.hpp"

namespace sepq {

namespace {

constexpr std::size_t kBatch = 64;

struct Split {
  std::vector<int> subset;  // local qubit indices, increasing
  PqReport report;
};

std::optional<Split> first_split_serial(const PureState& state, const std::vector<std::vector<int>>& order,
                                        const DecomposeOptions& opt) {
  for (const auto& subset : order) {
    PqReport rep = is_pq_separable_subset(state, subset, opt.tol_zero, opt.tol_pp);
    if (rep.separable) return Split{subset, std::move(rep)};
  }
  return std::nullopt;
}

// Evaluates candidates a batch at a time and keeps the lowest separating
// index, so the answer matches the serial scan.
std::optional<Split> first_split_parallel(const PureState& state, const std::vector<std::vector<int>>& order,
                                          const DecomposeOptions& opt) {
  const std::size_t total = order.size();
  for (std::size_t start = 0; start < total; start += kBatch) {
    const std::size_t count = std::min(kBatch, total - start);
    std::vector<std::optional<PqReport>> found(count);
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      try {
        PqReport rep = is_pq_separable_subset(state, order[start + static_cast<std::size_t>(i)], opt.tol_zero,
                                              opt.tol_pp);
        if (rep.separable) found[static_cast<std::size_t>(i)] = std::move(rep);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    for (std::size_t i = 0; i < count; ++i) {
      if (found[i]) return Split{order[start + i], std::move(*found[i])};
    }
  }
  return std::nullopt;
}

void split_block(std::vector<int> qubits, PureState state, const DecomposeOptions& opt,
                 std::vector<FactorBlock>& out) {
  const int m = state.qubits();
  if (m == 1) {
    out.push_back({std::move(qubits), std::move(state)});
    return;
  }
  const auto order = bipartition_search_order(m);
  auto split = opt.exec == kernels::Exec::Serial ? first_split_serial(state, order, opt)
                                                  : first_split_parallel(state, order, opt);
  if (!split) {
    out.push_back({std::move(qubits), std::move(state)});
    return;
  }
  std::vector<int> left_qubits;
  std::vector<int> right_qubits;
  for (int local = 0; local < m; ++local) {
    const bool in_left = std::binary_search(split->subset.begin(), split->subset.end(), local);
    (in_left ? left_qubits : right_qubits).push_back(qubits[static_cast<std::size_t>(local)]);
  }
  auto [left, right] = std::move(*split->report.factors);
  split_block(std::move(left_qubits), std::move(left), opt, out);
  split_block(std::move(right_qubits), std::move(right), opt, out);
}

void next_combination(std::vector<int>& c, int upper, bool& done) {
  // Advance a sorted combination of values in [1, upper) lexicographically.
  const int s = static_cast<int>(c.size());
  int i = s - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == upper - s + i) --i;
  if (i < 0) {
    done = true;
    return;
  }
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < s; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
}

}  // namespace

std::vector<std::vector<int>> bipartition_search_order(int qubits) {
  std::vector<std::vector<int>> order;
  for (int size = 1; size < qubits; ++size) {
    std::vector<int> rest(static_cast<std::size_t>(size - 1));
    for (int j = 0; j < size - 1; ++j) rest[static_cast<std::size_t>(j)] = j + 1;
    bool done = false;
    while (!done) {
      std::vector<int> subset{0};
      subset.insert(subset.end(), rest.begin(), rest.end());
      order.push_back(std::move(subset));
      if (rest.empty()) break;
      next_combination(rest, qubits, done);
    }
  }
  return order;
}

std::uint64_t count_bipartitions(int qubits) {
  if (qubits < 2) return 0;
  return (std::uint64_t{1} << (qubits - 1)) - 1;
}

FactorTree decompose(const PureState& state, const DecomposeOptions& options) {
  if (state.qubits() > kMaxDecomposeQubits) {
    throw Error(ErrorKind::TooLarge, std::to_string(state.qubits()) + " qubits exceeds the decomposition limit of " +
                                         std::to_string(kMaxDecomposeQubits));
  }
  std::vector<int> all(static_cast<std::size_t>(state.qubits()));
  for (int q = 0; q < state.qubits(); ++q) all[static_cast<std::size_t>(q)] = q;

  FactorTree tree;
  split_block(std::move(all), state, options, tree.blocks);
  std::sort(tree.blocks.begin(), tree.blocks.end(),
            [](const FactorBlock& a, const FactorBlock& b) { return a.qubits.front() < b.qubits.front(); });

  std::vector<int> perm;
  for (const auto& block : tree.blocks) perm.insert(perm.end(), block.qubits.begin(), block.qubits.end());
  tree.permutation = QubitPermutation(std::move(perm));
  return tree;
}

PureState reconstruct(const FactorTree& tree) {
  std::vector<PureState> states;
  states.reserve(tree.blocks.size());
  for (const auto& block : tree.blocks) states.push_back(block.state);
  return permute_qubits(tensor(std::span<const PureState>(states)), tree.permutation.inverse());
}

}  // namespace sepq
