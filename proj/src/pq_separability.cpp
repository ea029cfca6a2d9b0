#include "sepq/pq_separability.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sepq/error.hpp"
#include "sepq/full_separability.hpp"

namespace sepq {

namespace {

void check_split(const PureState& state, int p) {
  if (p < 1 || p > state.qubits() - 1) {
    throw Error(ErrorKind::BadSplit, "split p = " + std::to_string(p) + " outside [1, " +
                                         std::to_string(state.qubits() - 1) + "]");
  }
}

struct Factors {
  std::vector<Amplitude> left;
  std::vector<Amplitude> right;
  ReconstructionWitness worst;
};

Factors build_factors(const PureState& state, int p, const Pivot& pivot) {
  const int n = state.qubits();
  const std::uint64_t P = std::uint64_t{1} << p;
  const std::uint64_t Q = std::uint64_t{1} << (n - p);
  const auto a = state.amplitudes();
  const Amplitude lead = a[pivot.i0];

  double tail = 0.0;
  for (std::uint64_t i = pivot.i0 + 1; i <= (pivot.k0 + 1) * Q - 1; ++i) tail += std::norm(a[i]);
  const double g0 = 1.0 / std::sqrt(1.0 + tail / std::norm(lead));

  Factors f;
  f.right.resize(Q);
  for (std::uint64_t r = 0; r < Q; ++r) f.right[r] = g0 * a[pivot.k0 * Q + r] / lead;
  f.right[pivot.r0] = g0;
  f.left.resize(P);
  for (std::uint64_t k = 0; k < P; ++k) f.left[k] = a[k * Q + pivot.r0] / g0;

  for (std::uint64_t k = 0; k < P; ++k) {
    for (std::uint64_t r = 0; r < Q; ++r) {
      const double err = std::abs(f.left[k] * f.right[r] - a[k * Q + r]);
      if (err > f.worst.error) f.worst = {k * Q + r, err};
    }
  }
  return f;
}

}  // namespace

Pivot find_pivot(const PureState& state, int p, double tol_zero) {
  check_split(state, p);
  const std::uint64_t Q = std::uint64_t{1} << (state.qubits() - p);
  const auto a = state.amplitudes();
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i]) > tol_zero) return Pivot{i, i / Q, i % Q};
  }
  throw Error(ErrorKind::AllZero, "no amplitude exceeds the zero tolerance");
}

bool cross_product_condition(const PureState& state, int p, double tol_zero, double tol_pp) {
  const Pivot pv = find_pivot(state, p, tol_zero);
  const std::uint64_t P = std::uint64_t{1} << p;
  const std::uint64_t Q = std::uint64_t{1} << (state.qubits() - p);
  const auto a = state.amplitudes();
  for (std::uint64_t k = pv.k0 + 1; k < P; ++k)
    for (std::uint64_t r = pv.r0 + 1; r < Q; ++r)
      if (!products_equal(a[pv.i0] * a[k * Q + r], a[pv.k0 * Q + r] * a[k * Q + pv.r0], tol_pp)) return false;
  return true;
}

PqReport is_pq_separable(const PureState& state, int p, double tol_zero, double tol_pp) {
  check_split(state, p);
  PqReport report;
  report.p = p;
  report.q = state.qubits() - p;
  const Pivot pv = find_pivot(state, p, tol_zero);
  report.pivot = pv;

  const std::uint64_t P = std::uint64_t{1} << p;
  const std::uint64_t Q = std::uint64_t{1} << report.q;
  const auto a = state.amplitudes();
  const Amplitude lead = a[pv.i0];

  for (std::uint64_t k = pv.k0 + 1; k < P; ++k) {
    for (std::uint64_t r = pv.r0 + 1; r < Q; ++r) {
      const Amplitude lhs = lead * a[k * Q + r];
      const Amplitude rhs = a[pv.k0 * Q + r] * a[k * Q + pv.r0];
      ++report.cross_comparisons;
      if (!products_equal(lhs, rhs, tol_pp)) {
        report.witness = CrossProductWitness{k, r, lhs, rhs};
        return report;
      }
    }
  }

  // Every group must share the pivot group's leading zeros.
  for (std::uint64_t k = 0; k < P; ++k) {
    for (std::uint64_t r = 0; r < pv.r0; ++r) {
      ++report.zero_checks;
      const double mag = std::abs(a[k * Q + r]);
      if (mag > tol_zero) {
        report.witness = ZeroPatternWitness{k, r, mag};
        return report;
      }
    }
  }

  Factors f = build_factors(state, p, pv);
  if (f.worst.error > kReconstructionTol) {
    report.witness = f.worst;
    return report;
  }
  try {
    report.factors.emplace(PureState::make(p, std::move(f.left)), PureState::make(report.q, std::move(f.right)));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotNormalized) throw;
    report.witness = f.worst;
    return report;
  }
  report.separable = true;
  return report;
}

std::pair<PureState, PureState> factor_pq(const PureState& state, int p, const Pivot& pivot) {
  check_split(state, p);
  const std::uint64_t Q = std::uint64_t{1} << (state.qubits() - p);
  if (pivot.i0 >= state.size() || pivot.k0 != pivot.i0 / Q || pivot.r0 != pivot.i0 % Q ||
      state[pivot.i0] == Amplitude{}) {
    throw Error(ErrorKind::NotSeparable, "pivot does not address a nonzero amplitude for this split");
  }
  Factors f = build_factors(state, p, pivot);
  if (f.worst.error > kReconstructionTol) {
    throw Error(ErrorKind::NotSeparable, "factors miss amplitude " + std::to_string(f.worst.index) + " by " +
                                             std::to_string(f.worst.error));
  }
  try {
    return {PureState::make(p, std::move(f.left)), PureState::make(state.qubits() - p, std::move(f.right))};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotNormalized) throw;
    throw Error(ErrorKind::NotSeparable, e.what());
  }
}

QubitPermutation subset_first_permutation(int qubits, std::span<const int> subset) {
  std::vector<int> chosen(subset.begin(), subset.end());
  std::sort(chosen.begin(), chosen.end());
  if (chosen.empty() || static_cast<int>(chosen.size()) >= qubits) {
    throw Error(ErrorKind::BadSplit, "subset must be nonempty and proper");
  }
  if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end() || chosen.front() < 0 ||
      chosen.back() >= qubits) {
    throw Error(ErrorKind::BadSplit, "subset has repeated or out-of-range qubits");
  }
  std::vector<int> perm = chosen;
  for (int q = 0; q < qubits; ++q)
    if (!std::binary_search(chosen.begin(), chosen.end(), q)) perm.push_back(q);
  return QubitPermutation(std::move(perm));
}

PqReport is_pq_separable_subset(const PureState& state, std::span<const int> subset, double tol_zero,
                                double tol_pp) {
  QubitPermutation perm = subset_first_permutation(state.qubits(), subset);
  const PureState moved = permute_qubits(state, perm);
  PqReport report = is_pq_separable(moved, static_cast<int>(subset.size()), tol_zero, tol_pp);
  report.permutation = std::move(perm);
  return report;
}

}  // namespace sepq
