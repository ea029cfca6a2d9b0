#pragma once

// Data-parallel kernels behind the state and oracle modules. Each kernel has
// a serial reference path and an OpenMP path selected by Exec; both must
// produce bit-identical results (tests/unit/test_kernels.cpp).

#include <cstddef>
#include <span>

#include "sepq/state.hpp"

namespace sepq::kernels {

enum class Exec { Serial, Parallel };

// out[k*|right| + r] = left[k] * right[r]
void tensor(std::span<const Amplitude> left, std::span<const Amplitude> right,
            std::span<Amplitude> out, Exec exec = Exec::Parallel);

// out[j] = in[source(j)], where output qubit t reads input qubit perm[t].
void permute(std::span<const Amplitude> in, std::span<const int> perm, std::span<Amplitude> out,
             Exec exec = Exec::Parallel);

// Max over all entries of |M[k][r] * M[k*][r*] - M[k][r*] * M[k*][r]| for a
// rows x cols row-major matrix, where (k*, r*) is the entry of largest
// magnitude. Zero iff the matrix has rank <= 1.
struct PivotResidual {
  std::size_t pivot_row = 0;
  std::size_t pivot_col = 0;
  double pivot_magnitude = 0.0;
  double max_residual = 0.0;
};

PivotResidual rank_one_residual(std::span<const Amplitude> matrix, std::size_t rows, std::size_t cols,
                                Exec exec = Exec::Parallel);

}  // namespace sepq::kernels
