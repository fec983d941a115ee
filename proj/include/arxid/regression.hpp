#pragma once

// Overdetermined ARX regression b = A x.
//
// Documentation of the model uses 1-based sample numbers y(1)..y(N); the
// code is 0-based, so y(k) in the docs is values[k - 1]. For denominator
// order n and numerator order m, the row for sample k (0-based, k >= n) is
//
//   b[k - n] = y[k]
//   A[k - n] = [-y[k-1], ..., -y[k-n], u[k-(n-m)], ..., u[k-n]]
//
// and x = [a_{n-1}, ..., a_0, b_m, ..., b_0]. For the second-order ZOH model
// the first row is [-y(2), -y(1), u(2), u(1)] with right-hand side y(3).

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "arxid/discretize.hpp"
#include "arxid/simulate.hpp"

namespace arxid {

struct RegressionProblem {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  std::vector<std::string> column_labels;
  std::size_t n = 0;
  std::size_t m = 0;
};

RegressionProblem build_regression(const TimeSeries& y, const TimeSeries& u, std::size_t n,
                                   std::size_t m);

struct LseSolution {
  Eigen::VectorXd x;
  double residual_norm = 0.0;
  // Ratio of largest to smallest |R_ii| of the column-equilibrated QR factor.
  double condition_estimate = 0.0;
};

// Relative threshold on the QR factor diagonal below which a column counts
// as dependent.
inline constexpr double kRankTolerance = 1e-10;

// Least-squares minimizer of |Ax - b|_2 via column-pivoted Householder QR on
// unit-norm columns. Throws RankDeficient when the data cannot identify all
// unknowns.
LseSolution solve_lse(const RegressionProblem& prob);

struct ResidualStats {
  double rms = 0.0;
  double max_abs = 0.0;
};

ResidualStats residual_stats(const RegressionProblem& prob, const LseSolution& sol);

// Packs a solution vector back into model form.
ArxModel model_from_solution(const LseSolution& sol, Method method, Output output, double h);

// Writes A and b as CSV with one header row of column labels plus "b".
void write_regression_csv(const RegressionProblem& prob, const std::string& path);

}  // namespace arxid
