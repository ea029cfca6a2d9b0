#pragma once

#include <cstdint>
#include <vector>

#include "sepq/kernels.hpp"
#include "sepq/state.hpp"
#include "sepq/tolerances.hpp"

namespace sepq {

struct FactorBlock {
  std::vector<int> qubits;  // increasing; the block state's qubit order
  PureState state;
};

// Blocks are irreducible and partition the qubits. With `permutation` the
// concatenation of the blocks' qubit lists,
//   tensor(block states) == permute_qubits(input, permutation).
struct FactorTree {
  std::vector<FactorBlock> blocks;
  QubitPermutation permutation = QubitPermutation::identity(0);
};

struct DecomposeOptions {
  double tol_zero = kTolZero;
  double tol_pp = kTolPairProduct;
  kernels::Exec exec = kernels::Exec::Parallel;
};

// Exhaustive search: within each block, subsets containing the block's first
// qubit are tried by (size, lexicographic) order and the first separating
// one splits the block. Blocks are returned sorted by their smallest qubit.
// Throws TooLarge for n > kMaxDecomposeQubits.
FactorTree decompose(const PureState& state, const DecomposeOptions& options = {});

// Number of unordered nontrivial bipartitions of n qubits, 2^(n-1) - 1.
std::uint64_t count_bipartitions(int qubits);

// Subsets of {0..m-1} that contain 0, excluding the full set, in the search
// order used by decompose().
std::vector<std::vector<int>> bipartition_search_order(int qubits);

PureState reconstruct(const FactorTree& tree);

}  // namespace sepq
