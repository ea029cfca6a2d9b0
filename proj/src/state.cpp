#include "sepq/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sepq/error.hpp"
#include "sepq/kernels.hpp"

namespace sepq {

namespace {

constexpr int kMaxQubits = 40;

}  // namespace

PureState PureState::make(int qubits, std::vector<Amplitude> amplitudes, double tol_norm) {
  if (qubits < 1 || qubits > kMaxQubits) {
    throw Error(ErrorKind::LengthMismatch, "qubit count " + std::to_string(qubits) + " out of range");
  }
  const std::size_t expected = std::size_t{1} << qubits;
  if (amplitudes.size() != expected) {
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(expected) + " amplitudes, got " +
                                               std::to_string(amplitudes.size()));
  }
  PureState state(qubits, std::move(amplitudes));
  const double norm2 = state.norm_squared();
  if (!(std::abs(norm2 - 1.0) <= tol_norm)) {
    throw Error(ErrorKind::NotNormalized, "sum |a_i|^2 = " + std::to_string(norm2));
  }
  return state;
}

double PureState::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

QubitPermutation::QubitPermutation(std::vector<int> perm) : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (int source : perm_) {
    if (source < 0 || static_cast<std::size_t>(source) >= perm_.size() || seen[static_cast<std::size_t>(source)]) {
      throw Error(ErrorKind::BadPermutation, "not a bijection on 0.." + std::to_string(perm_.size()) + "-1");
    }
    seen[static_cast<std::size_t>(source)] = true;
  }
}

QubitPermutation QubitPermutation::identity(int qubits) {
  std::vector<int> perm(static_cast<std::size_t>(qubits));
  for (int j = 0; j < qubits; ++j) perm[static_cast<std::size_t>(j)] = j;
  return QubitPermutation(std::move(perm));
}

QubitPermutation QubitPermutation::inverse() const {
  std::vector<int> inv(perm_.size());
  for (std::size_t j = 0; j < perm_.size(); ++j) inv[static_cast<std::size_t>(perm_[j])] = static_cast<int>(j);
  return QubitPermutation(std::move(inv));
}

PureState tensor(const PureState& left, const PureState& right) {
  std::vector<Amplitude> out(left.size() * right.size());
  kernels::tensor(left.amplitudes(), right.amplitudes(), out);
  return PureState::make(left.qubits() + right.qubits(), std::move(out));
}

PureState tensor(std::span<const PureState> factors) {
  if (factors.empty()) throw Error(ErrorKind::LengthMismatch, "empty tensor product");
  PureState result = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) result = tensor(result, factors[i]);
  return result;
}

PureState tensor(std::span<const QubitFactor> factors) {
  std::vector<PureState> states;
  states.reserve(factors.size());
  for (const auto& f : factors) states.push_back(f.to_state());
  return tensor(std::span<const PureState>(states));
}

PureState permute_qubits(const PureState& state, const QubitPermutation& perm) {
  if (perm.size() != state.qubits()) {
    throw Error(ErrorKind::BadPermutation, "permutation size " + std::to_string(perm.size()) +
                                               " does not match " + std::to_string(state.qubits()) + " qubits");
  }
  std::vector<Amplitude> out(state.size());
  kernels::permute(state.amplitudes(), perm.values(), out);
  return PureState::make(state.qubits(), std::move(out));
}

PureState basis_state(int qubits, std::uint64_t index) {
  std::vector<Amplitude> a(std::size_t{1} << qubits);
  if (index >= a.size()) throw Error(ErrorKind::LengthMismatch, "basis index out of range");
  a[index] = 1.0;
  return PureState::make(qubits, std::move(a));
}

PureState ghz_state(int qubits) {
  std::vector<Amplitude> a(std::size_t{1} << qubits);
  a.front() = a.back() = 1.0 / std::sqrt(2.0);
  return PureState::make(qubits, std::move(a));
}

PureState w_state(int qubits) {
  std::vector<Amplitude> a(std::size_t{1} << qubits);
  const double c = 1.0 / std::sqrt(static_cast<double>(qubits));
  for (int j = 0; j < qubits; ++j) a[std::size_t{1} << j] = c;
  return PureState::make(qubits, std::move(a));
}

PureState bell_state() {
  const double c = 1.0 / std::sqrt(2.0);
  return PureState::make(2, {c, 0.0, 0.0, c});
}

PureState plus_state() {
  const double c = 1.0 / std::sqrt(2.0);
  return PureState::make(1, {c, c});
}

double max_abs_diff(std::span<const Amplitude> a, std::span<const Amplitude> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "size mismatch in comparison");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace sepq
