#pragma once

#include "sepq/kernels.hpp"
#include "sepq/state.hpp"
#include "sepq/tolerances.hpp"

namespace sepq::oracle {

// Rank test on the 2^p x 2^(n-p) reshape M[k][r] = a[k Q + r]: true iff
// every 2x2 minor against the largest entry is within tol_rank * |pivot|^2.
bool oracle_pq(const PureState& state, int p, double tol_rank = kTolRank,
               kernels::Exec exec = kernels::Exec::Parallel);

// Conjunction of oracle_pq over the contiguous cuts p = 1 .. n-1.
bool oracle_fully_separable(const PureState& state, double tol_rank = kTolRank,
                            kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace sepq::oracle
