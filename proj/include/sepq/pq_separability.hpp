#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>

#include "sepq/state.hpp"
#include "sepq/tolerances.hpp"

namespace sepq {

// First amplitude above the zero tolerance, in P x Q group coordinates.
struct Pivot {
  std::uint64_t i0 = 0;
  std::uint64_t k0 = 0;  // i0 / Q
  std::uint64_t r0 = 0;  // i0 % Q

  friend bool operator==(const Pivot&, const Pivot&) = default;
};

Pivot find_pivot(const PureState& state, int p, double tol_zero = kTolZero);

// a[k0 Q + r0] a[k Q + r] != a[k0 Q + r] a[k Q + r0]
struct CrossProductWitness {
  std::uint64_t k = 0;
  std::uint64_t r = 0;
  Amplitude lhs;
  Amplitude rhs;
};

// a[k Q + r] is nonzero for a column r left of the pivot column.
struct ZeroPatternWitness {
  std::uint64_t k = 0;
  std::uint64_t r = 0;
  double magnitude = 0.0;
};

// Both conditions held but the constructed factors did not reproduce the
// state to within kReconstructionTol.
struct ReconstructionWitness {
  std::uint64_t index = 0;
  double error = 0.0;
};

using PqWitness = std::variant<CrossProductWitness, ZeroPatternWitness, ReconstructionWitness>;

struct PqReport {
  bool separable = false;
  int p = 0;
  int q = 0;
  std::optional<Pivot> pivot;
  std::optional<PqWitness> witness;
  std::optional<std::pair<PureState, PureState>> factors;
  // Set when the check ran on a reordered state (subset form); factors are
  // in that order.
  std::optional<QubitPermutation> permutation;
  std::uint64_t cross_comparisons = 0;
  std::uint64_t zero_checks = 0;
};

inline constexpr double kReconstructionTol = 1e-9;

// Separable iff
//   (a) a[k0 Q + r0] a[k Q + r] == a[k0 Q + r] a[k Q + r0] for k > k0, r > r0;
//   (b) a[k Q + r] == 0 for every group k and every r < r0.
// (a) alone is not sufficient: (0, a, b, 0) passes it vacuously at p = 1.
// Throws BadSplit unless 1 <= p <= n-1.
PqReport is_pq_separable(const PureState& state, int p, double tol_zero = kTolZero,
                         double tol_pp = kTolPairProduct);

// Only condition (a) above. Exposed so the insufficiency of the bare
// cross-product test stays covered by tests.
bool cross_product_condition(const PureState& state, int p, double tol_zero = kTolZero,
                             double tol_pp = kTolPairProduct);

// Left and right factors built from the pivot: gamma[r0] real positive with
// |gamma[r0]|^2 = 1 / (1 + sum_{i=i0+1}^{(k0+1)Q-1} |a_i|^2 / |a_i0|^2),
// gamma[r] = gamma[r0] a[k0 Q + r] / a_i0, beta[k] = a[k Q + r0] / gamma[r0].
// Throws NotSeparable if the product does not reproduce the state.
std::pair<PureState, PureState> factor_pq(const PureState& state, int p, const Pivot& pivot);

// Moves `subset` (any order; used sorted) to the front, the remaining qubits
// after it, and runs is_pq_separable with p = |subset|.
PqReport is_pq_separable_subset(const PureState& state, std::span<const int> subset,
                                double tol_zero = kTolZero, double tol_pp = kTolPairProduct);

// Permutation used by is_pq_separable_subset.
QubitPermutation subset_first_permutation(int qubits, std::span<const int> subset);

}  // namespace sepq
