#include "sepq/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "sepq/error.hpp"

namespace sepq::kernels {

namespace {

using Index = std::int64_t;

// Source index for output index j: output bit position t (qubit t, i.e. bit
// n-1-t of the integer) is read from input qubit perm[t].
inline std::uint64_t source_index(std::uint64_t j, std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  std::uint64_t i = 0;
  for (int t = 0; t < n; ++t) {
    const std::uint64_t bit = (j >> (n - 1 - t)) & 1U;
    i |= bit << (n - 1 - perm[static_cast<std::size_t>(t)]);
  }
  return i;
}

struct Candidate {
  double magnitude = -1.0;
  Index index = 0;
};

// Larger magnitude wins; ties go to the smaller index so the serial and
// parallel reductions agree.
inline Candidate better(const Candidate& a, const Candidate& b) {
  if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude ? a : b;
  return a.index <= b.index ? a : b;
}

}  // namespace

void tensor(std::span<const Amplitude> left, std::span<const Amplitude> right, std::span<Amplitude> out,
            Exec exec) {
  if (out.size() != left.size() * right.size()) throw Error(ErrorKind::LengthMismatch, "tensor output size");
  const Index rows = static_cast<Index>(left.size());
  const Index cols = static_cast<Index>(right.size());
  if (exec == Exec::Serial) {
    for (Index k = 0; k < rows; ++k)
      for (Index r = 0; r < cols; ++r) out[static_cast<std::size_t>(k * cols + r)] = left[k] * right[r];
    return;
  }
#pragma omp parallel for schedule(static) if (rows * cols > 4096)
  for (Index k = 0; k < rows; ++k)
    for (Index r = 0; r < cols; ++r) out[static_cast<std::size_t>(k * cols + r)] = left[k] * right[r];
}

void permute(std::span<const Amplitude> in, std::span<const int> perm, std::span<Amplitude> out, Exec exec) {
  if (out.size() != in.size() || in.size() != (std::size_t{1} << perm.size())) {
    throw Error(ErrorKind::LengthMismatch, "permute sizes");
  }
  const Index size = static_cast<Index>(in.size());
  if (exec == Exec::Serial) {
    for (Index j = 0; j < size; ++j) out[static_cast<std::size_t>(j)] = in[source_index(static_cast<std::uint64_t>(j), perm)];
    return;
  }
#pragma omp parallel for schedule(static) if (size > 4096)
  for (Index j = 0; j < size; ++j) out[static_cast<std::size_t>(j)] = in[source_index(static_cast<std::uint64_t>(j), perm)];
}

PivotResidual rank_one_residual(std::span<const Amplitude> matrix, std::size_t rows, std::size_t cols, Exec exec) {
  if (matrix.size() != rows * cols) throw Error(ErrorKind::LengthMismatch, "matrix size");
  const Index size = static_cast<Index>(matrix.size());

  Candidate best;
  if (exec == Exec::Serial) {
    for (Index i = 0; i < size; ++i) best = better(best, {std::abs(matrix[static_cast<std::size_t>(i)]), i});
  } else {
#pragma omp declare reduction(pivot:Candidate : omp_out = better(omp_out, omp_in)) initializer(omp_priv = Candidate{})
#pragma omp parallel for reduction(pivot : best) schedule(static) if (size > 4096)
    for (Index i = 0; i < size; ++i) best = better(best, {std::abs(matrix[static_cast<std::size_t>(i)]), i});
  }

  PivotResidual result;
  if (size == 0) return result;
  const auto pr = static_cast<std::size_t>(best.index) / cols;
  const auto pc = static_cast<std::size_t>(best.index) % cols;
  result.pivot_row = pr;
  result.pivot_col = pc;
  result.pivot_magnitude = best.magnitude;

  const Amplitude pivot = matrix[pr * cols + pc];
  const Index n_rows = static_cast<Index>(rows);
  double worst = 0.0;
  if (exec == Exec::Serial) {
    for (Index k = 0; k < n_rows; ++k) {
      const auto row = static_cast<std::size_t>(k) * cols;
      for (std::size_t r = 0; r < cols; ++r) {
        const Amplitude minor = matrix[row + r] * pivot - matrix[row + pc] * matrix[pr * cols + r];
        worst = std::max(worst, std::abs(minor));
      }
    }
  } else {
#pragma omp parallel for reduction(max : worst) schedule(static) if (size > 4096)
    for (Index k = 0; k < n_rows; ++k) {
      const auto row = static_cast<std::size_t>(k) * cols;
      for (std::size_t r = 0; r < cols; ++r) {
        const Amplitude minor = matrix[row + r] * pivot - matrix[row + pc] * matrix[pr * cols + r];
        worst = std::max(worst, std::abs(minor));
      }
    }
  }
  result.max_residual = worst;
  return result;
}

}  // namespace sepq::kernels
