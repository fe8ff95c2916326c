#include "cylsep/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cylsep {

namespace {
constexpr double kCostTol = 1e-9;    // reduced-cost optimality threshold
constexpr double kPivotTol = 1e-11;  // smallest usable pivot element
}  // namespace

FeasibilityResult solve_equality_feasibility(const Eigen::MatrixXd& A,
                                             const Eigen::VectorXd& b) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (b.size() != m) throw std::invalid_argument("lp: shape mismatch");

  // Columns: [original n | slack +e_i | slack -e_i], both slack blocks cost 1.
  // Rows are sign-flipped so the rhs is nonnegative and the +e_i slacks form
  // a feasible starting basis.
  const int ncols = n + 2 * m;
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  RowMajor T = RowMajor::Zero(m, ncols + 1);
  for (int i = 0; i < m; ++i) {
    const double s = b(i) < 0.0 ? -1.0 : 1.0;
    T.row(i).segment(0, n) = s * A.row(i);
    T(i, n + i) = 1.0;
    T(i, n + m + i) = -1.0;
    T(i, ncols) = s * b(i);
  }

  // Reduced-cost row for cost (0..0, 1..1, 1..1) with the slack basis: the
  // dual is the all-ones vector, so r_j = c_j - colsum_j.
  Eigen::RowVectorXd red(ncols);
  for (int j = 0; j < n; ++j) red(j) = -T.col(j).sum();
  for (int j = 0; j < m; ++j) red(n + j) = 0.0;
  for (int j = 0; j < m; ++j) red(n + m + j) = 2.0;

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  const int max_iters = 2000 + 40 * (m + n);
  int iters = 0;
  bool bland = false;
  int stall = 0;
  double last_obj = std::numeric_limits<double>::infinity();

  while (iters < max_iters) {
    // Entering column.
    int enter = -1;
    if (!bland) {
      double best = -kCostTol;
      for (int j = 0; j < ncols; ++j)
        if (red(j) < best) { best = red(j); enter = j; }
    } else {
      for (int j = 0; j < ncols; ++j)
        if (red(j) < -kCostTol) { enter = j; break; }
    }
    if (enter < 0) break;  // optimal

    // Ratio test; ties resolved toward the smallest leaving basis index so
    // the Bland fallback terminates.
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      const double a = T(i, enter);
      if (a > kPivotTol) {
        const double ratio = T(i, ncols) / a;
        if (ratio < best_ratio - 1e-12 ||
            (ratio < best_ratio + 1e-12 && (leave < 0 || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0)
      throw std::runtime_error("lp: unbounded phase-1 objective (numerical failure)");

    // Pivot.
    const double pivot = T(leave, enter);
    T.row(leave) /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = T(i, enter);
      if (f != 0.0) T.row(i) -= f * T.row(leave);
    }
    const double fr = red(enter);
    if (fr != 0.0) red -= fr * T.row(leave).segment(0, ncols);
    basis[leave] = enter;
    ++iters;

    // Objective from the basis directly, avoiding drift in the cost row.
    double obj = 0.0;
    for (int i = 0; i < m; ++i)
      if (basis[i] >= n) obj += T(i, ncols);
    if (obj < last_obj - 1e-15) {
      last_obj = obj;
      stall = 0;
    } else if (++stall > 60) {
      bland = true;  // degenerate cycling guard
    }
  }

  FeasibilityResult res;
  res.iterations = iters;
  res.converged = iters < max_iters;
  res.x.assign(n, 0.0);
  double obj = 0.0;
  for (int i = 0; i < m; ++i) {
    const double v = T(i, ncols);
    if (basis[i] < n)
      res.x[basis[i]] = v;
    else
      obj += v;
  }
  res.violation = obj;
  return res;
}

}  // namespace cylsep
