#include "arxid/regression.hpp"

#include <Eigen/QR>
#include <cmath>

#include "arxid/csv.hpp"
#include "arxid/error.hpp"

namespace arxid {

RegressionProblem build_regression(const TimeSeries& y, const TimeSeries& u, std::size_t n,
                                   std::size_t m) {
  if (n == 0 || m > n) throw Error(ErrorCode::InvalidArgument, "need n >= 1 and m <= n");
  y.check();
  u.check();
  if (!same_sampling(y.h, u.h)) {
    throw Error(ErrorCode::SamplingMismatch, "input and output sampling intervals differ");
  }
  if (y.size() != u.size()) {
    throw Error(ErrorCode::LengthMismatch, "input and output lengths differ");
  }
  const std::size_t cols = n + m + 1;
  const std::size_t len = y.size();
  if (len < n + cols) {
    throw Error(ErrorCode::TooFewSamples, "need at least " + std::to_string(n + cols) +
                                              " samples, got " + std::to_string(len));
  }
  const std::size_t rows = len - n;
  const std::size_t delay = n - m;

  RegressionProblem prob;
  prob.n = n;
  prob.m = m;
  prob.A.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  prob.b.resize(static_cast<Eigen::Index>(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t k = r + n;
    const auto row = static_cast<Eigen::Index>(r);
    prob.b(row) = y.values[k];
    for (std::size_t j = 1; j <= n; ++j) {
      prob.A(row, static_cast<Eigen::Index>(j - 1)) = -y.values[k - j];
    }
    for (std::size_t j = 0; j <= m; ++j) {
      prob.A(row, static_cast<Eigen::Index>(n + j)) = u.values[k - delay - j];
    }
  }
  for (std::size_t j = 0; j < n; ++j) prob.column_labels.push_back("a" + std::to_string(n - 1 - j));
  for (std::size_t j = 0; j <= m; ++j) prob.column_labels.push_back("b" + std::to_string(m - j));
  return prob;
}

LseSolution solve_lse(const RegressionProblem& prob) {
  const Eigen::Index rows = prob.A.rows();
  const Eigen::Index cols = prob.A.cols();
  if (rows < cols || cols == 0) {
    throw Error(ErrorCode::TooFewSamples, "regression needs rows >= cols");
  }
  if (prob.b.size() != rows) throw Error(ErrorCode::LengthMismatch, "b length differs from A rows");

  // Equilibrate columns; lagged outputs and inputs differ by orders of
  // magnitude and near-duplicate lags at small h make A badly scaled.
  Eigen::VectorXd scale(cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    const double norm = prob.A.col(j).norm();
    scale(j) = norm > 0.0 ? norm : 1.0;
  }
  const Eigen::MatrixXd scaled = prob.A * scale.cwiseInverse().asDiagonal();

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(scaled);
  qr.setThreshold(kRankTolerance);
  if (qr.rank() < cols) {
    throw Error(ErrorCode::RankDeficient,
                "effective rank " + std::to_string(qr.rank()) + " < " + std::to_string(cols) +
                    " unknowns; the data do not excite the model");
  }

  LseSolution sol;
  sol.x = qr.solve(prob.b).cwiseQuotient(scale);
  sol.residual_norm = (prob.A * sol.x - prob.b).norm();
  const auto diag = qr.matrixQR().diagonal().cwiseAbs();
  sol.condition_estimate = diag.maxCoeff() / diag.minCoeff();
  return sol;
}

ResidualStats residual_stats(const RegressionProblem& prob, const LseSolution& sol) {
  const Eigen::VectorXd r = prob.A * sol.x - prob.b;
  ResidualStats stats;
  if (r.size() == 0) return stats;
  stats.rms = sol.residual_norm / std::sqrt(static_cast<double>(r.size()));
  stats.max_abs = r.cwiseAbs().maxCoeff();
  return stats;
}

ArxModel model_from_solution(const LseSolution& sol, Method method, Output output, double h) {
  const auto [n, m] = model_order(method, output);
  if (static_cast<std::size_t>(sol.x.size()) != n + m + 1) {
    throw Error(ErrorCode::InvalidArgument, "solution length does not match model structure");
  }
  ArxModel model;
  model.h = h;
  model.method = method;
  model.output = output;
  model.den.assign(sol.x.data(), sol.x.data() + n);
  model.num.assign(sol.x.data() + n, sol.x.data() + sol.x.size());
  return model;
}

void write_regression_csv(const RegressionProblem& prob, const std::string& path) {
  std::vector<std::string> header = prob.column_labels;
  header.push_back("b");
  std::vector<std::vector<double>> columns;
  for (Eigen::Index c = 0; c < prob.A.cols(); ++c) {
    const Eigen::VectorXd col = prob.A.col(c);
    columns.emplace_back(col.data(), col.data() + col.size());
  }
  columns.emplace_back(prob.b.data(), prob.b.data() + prob.b.size());
  write_numeric_csv(path, header, columns);
}

}  // namespace arxid
