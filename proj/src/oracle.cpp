#include "sepq/oracle.hpp"

#include <string>

#include "sepq/error.hpp"

namespace sepq::oracle {

bool oracle_pq(const PureState& state, int p, double tol_rank, kernels::Exec exec) {
  if (p < 1 || p > state.qubits() - 1) {
    throw Error(ErrorKind::BadSplit, "split p = " + std::to_string(p) + " out of range");
  }
  const std::size_t rows = std::size_t{1} << p;
  const std::size_t cols = state.size() / rows;
  const auto res = kernels::rank_one_residual(state.amplitudes(), rows, cols, exec);
  return res.max_residual <= tol_rank * res.pivot_magnitude * res.pivot_magnitude;
}

bool oracle_fully_separable(const PureState& state, double tol_rank, kernels::Exec exec) {
  for (int p = 1; p < state.qubits(); ++p)
    if (!oracle_pq(state, p, tol_rank, exec)) return false;
  return true;
}

}  // namespace sepq::oracle
