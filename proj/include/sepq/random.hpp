#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "sepq/mask.hpp"
#include "sepq/state.hpp"

namespace sepq {



// Reproducible generator: std::mt19937_64 for raw bits, with uniform and
// Gaussian conversion done here (Box-Muller) rather than through
// <random> distributions, whose output is implementation-defined.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1), 53 random bits
  double gaussian();
  Amplitude complex_gaussian();
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

// Tensor product of independently drawn blocks of the given sizes. Each
// block is a vector of i.i.d. complex Gaussians, zeroed outside the block's
// support mask when one is given, then normalized.
PureState random_structured_state(std::span<const int> block_sizes, std::uint64_t seed,
                                  std::optional<std::span<const SupportMask>> zero_masks = {});

PureState random_block_state(int qubits, Prng& rng, const SupportMask* support = nullptr);

QubitPermutation random_permutation(int qubits, Prng& rng);

}  // namespace sepq
