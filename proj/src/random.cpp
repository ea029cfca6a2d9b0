#include "sepq/random.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "sepq/error.hpp"

namespace sepq {

double Prng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Prng::gaussian() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

Amplitude Prng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

std::uint64_t Prng::below(std::uint64_t bound) {
  if (bound == 0) return 0;
  // Rejection keeps the result unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

PureState random_block_state(int qubits, Prng& rng, const SupportMask* support) {
  const std::size_t size = std::size_t{1} << qubits;
  if (support && support->size() != size) {
    throw Error(ErrorKind::LengthMismatch, "zero mask length does not match block size");
  }
  if (support && support->popcount() == 0) throw Error(ErrorKind::AllZero, "zero mask has no support");
  std::vector<Amplitude> amps(size);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    // Draw unconditionally so the stream does not depend on the mask.
    const Amplitude z = rng.complex_gaussian();
    if (!support || support->test(i)) {
      amps[i] = z;
      norm2 += std::norm(z);
    }
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) a *= scale;
  return PureState::make(qubits, std::move(amps));
}

PureState random_structured_state(std::span<const int> block_sizes, std::uint64_t seed,
                                  std::optional<std::span<const SupportMask>> zero_masks) {
  if (block_sizes.empty()) throw Error(ErrorKind::LengthMismatch, "no blocks");
  if (zero_masks && zero_masks->size() != block_sizes.size()) {
    throw Error(ErrorKind::LengthMismatch, "one zero mask per block required");
  }
  Prng rng(seed);
  std::vector<PureState> blocks;
  blocks.reserve(block_sizes.size());
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    if (block_sizes[b] < 1) throw Error(ErrorKind::LengthMismatch, "block sizes must be positive");
    const SupportMask* mask = zero_masks ? &(*zero_masks)[b] : nullptr;
    blocks.push_back(random_block_state(block_sizes[b], rng, mask));
  }
  return tensor(std::span<const PureState>(blocks));
}

QubitPermutation random_permutation(int qubits, Prng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(qubits));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  return QubitPermutation(std::move(perm));
}

}  // namespace sepq
