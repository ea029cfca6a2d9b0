#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sepq/tolerances.hpp"

namespace sepq {

using Amplitude = std::complex<double>;

// Pure n-qubit state stored as 2^n amplitudes. Qubit 0 is the most
// significant bit of the amplitude index, so a p-q split places qubits
// 0..p-1 in the left factor and a[k*Q + r] = left[k] * right[r].
class PureState {
 public:
  // Validates length and normalization. Amplitudes are stored as given.
  static PureState make(int qubits, std::vector<Amplitude> amplitudes,
                        double tol_norm = kTolNorm);

  int qubits() const noexcept { return qubits_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  const Amplitude& operator[](std::size_t i) const { return amplitudes_[i]; }
  double norm_squared() const;

  friend bool operator==(const PureState&, const PureState&) = default;

 private:
  PureState(int qubits, std::vector<Amplitude> amplitudes)
      : qubits_(qubits), amplitudes_(std::move(amplitudes)) {}

  int qubits_ = 0;
  std::vector<Amplitude> amplitudes_;
};

inline PureState make_state(int qubits, std::vector<Amplitude> amplitudes) {
  return PureState::make(qubits, std::move(amplitudes));
}

struct QubitFactor {
  Amplitude amp0;
  Amplitude amp1;

  PureState to_state() const { return PureState::make(1, {amp0, amp1}); }
  friend bool operator==(const QubitFactor&, const QubitFactor&) = default;
};

// perm[j] is the source qubit placed at position j.
class QubitPermutation {
 public:
  explicit QubitPermutation(std::vector<int> perm);
  static QubitPermutation identity(int qubits);

  int size() const noexcept { return static_cast<int>(perm_.size()); }
  int operator[](int j) const { return perm_[static_cast<std::size_t>(j)]; }
  std::span<const int> values() const noexcept { return perm_; }
  QubitPermutation inverse() const;

  friend bool operator==(const QubitPermutation&, const QubitPermutation&) = default;

 private:
  std::vector<int> perm_;
};

PureState tensor(const PureState& left, const PureState& right);
PureState tensor(std::span<const PureState> factors);
PureState tensor(std::span<const QubitFactor> factors);

PureState permute_qubits(const PureState& state, const QubitPermutation& perm);

// Named states used throughout tests and the CLI.
PureState basis_state(int qubits, std::uint64_t index);
PureState ghz_state(int qubits);
PureState w_state(int qubits);
PureState bell_state();  // (|00> + |11>)/sqrt(2)
PureState plus_state();  // (|0> + |1>)/sqrt(2)

// Largest elementwise |a_i - b_i|; sizes must match.
double max_abs_diff(std::span<const Amplitude> a, std::span<const Amplitude> b);

}  // namespace sepq
