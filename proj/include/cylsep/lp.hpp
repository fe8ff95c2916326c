#pragma once

#include <Eigen/Dense>

#include <vector>

namespace cylsep {

/// Result of a dense equality-form feasibility solve:
/// minimize sum_r |（A x - b)_r| over x >= 0, via a phase-1 simplex with
/// violation split into nonnegative slack pairs. `violation` is the optimal
/// objective; the system is feasible exactly when it reaches (numerical) zero.
struct FeasibilityResult {
  double violation = 0.0;
  std::vector<double> x;
  int iterations = 0;
  bool converged = false;
};

/// Pivot rules are fixed (largest reduced cost, lowest-index ties, Bland
/// fallback on stalls), so repeated solves of the same system are
/// bit-identical.
FeasibilityResult solve_equality_feasibility(const Eigen::MatrixXd& A,
                                             const Eigen::VectorXd& b);

}  // namespace cylsep
