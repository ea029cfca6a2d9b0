#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "sepq/mask.hpp"
#include "sepq/state.hpp"
#include "sepq/tolerances.hpp"

namespace sepq {

// ---------------------------------------------------------------------------
// Well-formed bit strings
// ---------------------------------------------------------------------------

// Outcome of the recursive well-formedness test on a zero index list.
struct WellFormedness {
  bool well_formed = false;
  // Length of the substring at which the recursion rejected the mask
  // (0 when well formed) and the offset of that substring in the mask.
  std::size_t failed_length = 0;
  std::uint64_t failed_offset = 0;
  // Length tests plus element equality tests performed by the recursion.
  std::uint64_t comparisons = 0;
};

// Runs the low/high recursion over the zero positions of a mask of the given
// length. Masks with no set bit are rejected. Throws BadLength unless length
// is a power of two >= 2.
WellFormedness check_well_formed(std::span<const std::uint64_t> zeros, std::size_t length);

bool is_well_formed_mask(const SupportMask& mask);

// All well-formed masks of length 2^n in lexicographic order ('0' < '1').
// There are exactly 3^n of them. Throws TooLarge for n > kMaxEnumerateQubits.
std::vector<SupportMask> enumerate_well_formed(int qubits);

// ---------------------------------------------------------------------------
// Zero deletion and pair product invariance
// ---------------------------------------------------------------------------

// The nonzero amplitudes of `state` in index order. `mask` must be the
// amplitude abstraction of `state`. Throws TooFewNonzero if fewer than 2.
std::vector<Amplitude> zero_deletion(const PureState& state, const SupportMask& mask);

// |lhs - rhs| <= tol * max(1, |lhs|, |rhs|)
bool products_equal(Amplitude lhs, Amplitude rhs, double tol);

struct PairProductWitness {
  int level = 0;        // l, with L = 2^l
  std::size_t i = 0;    // violating pair (i, L-i-1) against (0, L-1)
  std::size_t length = 0;
  Amplitude lhs;        // v[i] * v[L-i-1]
  Amplitude rhs;        // v[0] * v[L-1]
};

struct PairProductResult {
  bool invariant = false;
  std::optional<PairProductWitness> witness;
  std::uint64_t comparisons = 0;
  std::uint64_t products = 0;
};

// For every level l in [2, k] checks v[i] v[L-i-1] == v[0] v[L-1] for
// i in [1, L/2 - 1]. A passing vector of length K = 2^k costs exactly
// K - k - 1 comparisons and K - 2 products. Throws BadLength unless the
// length is a power of two >= 2.
PairProductResult pair_product_invariant(std::span<const Amplitude> v, double tol_pp = kTolPairProduct);

// ---------------------------------------------------------------------------
// Full separability
// ---------------------------------------------------------------------------

enum class FullSepReason { WellFormednessFailed, PairProductFailed, Separable, TrivialBasisState };

std::string_view to_string(FullSepReason reason);

struct MaskWitness {
  std::size_t popcount = 0;
  std::size_t failed_length = 0;  // substring length where the mask was rejected
  std::uint64_t failed_offset = 0;
};

// Reported when the two halves at some peeling step are not proportional.
struct ProportionalityWitness {
  int qubit = 0;
  std::size_t index = 0;
};

using FullSepWitness = std::variant<MaskWitness, PairProductWitness, ProportionalityWitness>;

struct FullSepCounters {
  std::uint64_t pair_comparisons = 0;
  std::uint64_t products = 0;
  std::uint64_t wf_comparisons = 0;
  std::uint64_t zeros = 0;
};

struct FullSepReport {
  bool separable = false;
  FullSepReason reason = FullSepReason::WellFormednessFailed;
  std::optional<FullSepWitness> witness;
  std::optional<std::vector<QubitFactor>> factors;
  FullSepCounters counters;
};

FullSepReport is_fully_separable(const PureState& state, double tol_zero = kTolZero,
                                 double tol_pp = kTolPairProduct);

// Peels qubits from the most significant end. Factors 1..n-1 have their first
// nonzero amplitude real and positive; factor 0 carries the global phase, so
// tensor(factors) reproduces the state itself. Throws NotSeparable when two
// halves fail to be proportional.
std::vector<QubitFactor> extract_qubit_factors(const PureState& state, double tol_zero = kTolZero,
                                               double tol_pp = kTolPairProduct);

}  // namespace sepq
