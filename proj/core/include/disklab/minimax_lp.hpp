#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "disklab/numeric.hpp"

namespace disklab {

/// min c'x subject to Ax = b, x >= 0, solved by a dense two-phase tableau
/// simplex (Dantzig pricing with a Bland fallback against cycling; fully
/// deterministic). A is row-major m x n. Duals are recovered from the final
/// tableau through the retained artificial columns.
struct LpResult {
  enum class Status { optimal, infeasible, unbounded, iteration_limit };
  Status status = Status::iteration_limit;
  double value = 0.0;
  std::vector<double> x;      ///< size n
  std::vector<double> duals;  ///< size m, y = c_B B^{-1}
};

LpResult solve_equality_lp(std::size_t m, std::size_t n,
                           std::vector<double> a, std::vector<double> b,
                           std::vector<double> c, int max_iterations = 50000);

/// min over simplex weights w of max_j |sum_i w_i atoms[i][j] - target[j]|.
///
/// The modulus minimax is a second-order cone program; it is solved by outer
/// linearization: half-plane cuts Re(e^{-i alpha}(...)) <= t accumulate per
/// point until the true objective at the iterate meets the LP lower bound.
/// The returned value is the true objective at the best weights seen, which
/// also never exceeds the uniform-weight or vertex candidates (they are in
/// the candidate pool).
struct MinimaxResult {
  std::vector<double> weights;
  double value = 0.0;      ///< true objective at `weights`
  double lp_bound = 0.0;   ///< final relaxation lower bound
  int rounds = 0;
  bool converged = false;  ///< gap closed to tolerance within the round cap
};

MinimaxResult minimize_max_modulus(
    const std::vector<std::vector<Complex>>& atoms,
    const std::vector<Complex>& target);

}  // namespace disklab
