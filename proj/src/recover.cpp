#include "arxid/recover.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arxid/error.hpp"

namespace arxid {

namespace {

constexpr double kDegenerateTolerance = 1e-12;

void require_shape(const ArxModel& c, Method method, Output output) {
  if (c.method != method || c.output != output) {
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::string(to_string(method)) + "/" +
                    std::string(to_string(output)) + " coefficients");
  }
  c.check();
}

double max_abs_coefficient(const ArxModel& c) {
  double out = 0.0;
  for (double v : c.den) out = std::max(out, std::abs(v));
  for (double v : c.num) out = std::max(out, std::abs(v));
  return out;
}

void require_positive_result(double value, const char* name) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw Error(ErrorCode::NonPhysical,
                std::string("recovered ") + name + " = " + std::to_string(value) + " is not > 0");
  }
}

GeneratorParams physical(double H, double R, double T) {
  require_positive_result(T, "T");
  require_positive_result(R, "R");
  require_positive_result(H, "H");
  try {
    return GeneratorParams::create(H, R, T);
  } catch (const Error& e) {
    throw Error(ErrorCode::NonPhysical, std::string("recovered parameters rejected: ") + e.what());
  }
}

double checked_arccos(double arg) {
  if (!std::isfinite(arg) || arg < -1.0 || arg > 1.0) {
    throw Error(ErrorCode::BranchViolation,
                "arccos argument " + std::to_string(arg) + " outside [-1, 1]");
  }
  return std::acos(arg);
}

// T from the pole pair modulus: |a0| = exp(-h/T).
double time_constant_from_modulus(double modulus, double h) {
  if (!(modulus > 0.0 && modulus < 1.0)) {
    throw Error(ErrorCode::BranchViolation, "pole modulus term " + std::to_string(modulus) +
                                                " outside (0, 1); T is undefined");
  }
  return -h / std::log(modulus);
}

}  // namespace

GeneratorParams recover_zoh_omega(const ArxModel& c) {
  require_shape(c, Method::Zoh, Output::Omega);
  const double h = c.h;
  const double a1 = c.den[0], a0 = c.den[1];
  const double b1 = c.num[0], b0 = c.num[1];

  const double T = time_constant_from_modulus(a0, h);
  const double omega = checked_arccos(-a1 * std::exp(h / (2.0 * T)) / 2.0) / h;
  const double r_den = 1.0 + std::exp(-h / T) + a1;
  if (std::abs(r_den) <= kDegenerateTolerance * (2.0 + std::abs(a1))) {
    throw Error(ErrorCode::DegenerateCoefficients, "1 + exp(-h/T) + a1 vanishes");
  }
  const double R = (b1 + b0) / r_den;
  const double H = 2.0 * T / (R + 4.0 * R * T * T * omega * omega);
  return physical(H, R, T);
}

GeneratorParams recover_tustin_omega(const ArxModel& c) {
  require_shape(c, Method::Tustin, Output::Omega);
  const double k = 2.0 / c.h;
  const double a1 = c.den[0];
  const double b2 = c.num[0], b1 = c.num[1];
  if (std::abs(b1) <= kDegenerateTolerance * max_abs_coefficient(c)) {
    throw Error(ErrorCode::DegenerateCoefficients, "b1 is numerically zero");
  }

  const double T = (2.0 * (b2 / b1) - 1.0) / k;
  require_positive_result(T, "T");
  const double hr_den = 2.0 * a1 * T * k * k + 2.0 * a1 * k + 4.0 * T * k * k;
  if (hr_den == 0.0) throw Error(ErrorCode::DegenerateCoefficients, "H*R equation is singular");
  const double HR = (2.0 - a1) / hr_den;
  require_positive_result(HR, "H*R");
  const double R = b2 * (2.0 * HR * T * k * k + 2.0 * HR * k + 1.0) / (1.0 + T * k);
  return physical(HR / R, R, T);
}

GeneratorParams recover_zoh_delta(const ArxModel& c) {
  require_shape(c, Method::Zoh, Output::Delta);
  const double h = c.h;
  const double a2 = c.den[0], a0 = c.den[2];
  const double b2 = c.num[0];

  const double T = time_constant_from_modulus(-a0, h);
  const double e_half = std::exp(-h / (2.0 * T));
  const double omega = checked_arccos(-(a2 + 1.0) / (2.0 * e_half)) / h;
  require_positive_result(omega, "omega");
  const double HR = 2.0 * T / (1.0 + 4.0 * omega * omega * T * T);

  const double a = T - 2.0 * HR;
  const double b = (3.0 * T - 2.0 * HR) / (2.0 * T) / omega;
  const double bracket =
      a - a * e_half * std::cos(omega * h) - b * e_half * std::sin(omega * h) + h;
  if (std::abs(bracket) <= kDegenerateTolerance * (std::abs(a) + std::abs(b) + h)) {
    throw Error(ErrorCode::DegenerateCoefficients, "b2 equation does not determine R");
  }
  const double R = b2 / bracket;
  return physical(HR / R, R, T);
}

GeneratorParams recover_tustin_delta(const ArxModel& c) {
  require_shape(c, Method::Tustin, Output::Delta);
  const double k = 2.0 / c.h;
  const double a2 = c.den[0], a1 = c.den[1];
  const double b3 = c.num[0];

  // a2 (2P + 2Q + k) = -6P - 2Q + k and a1 (2P + 2Q + k) = 6P - 2Q - k.
  const double m11 = 2.0 * a2 + 6.0, m12 = 2.0 * a2 + 2.0, r1 = k * (1.0 - a2);
  const double m21 = 2.0 * a1 - 6.0, m22 = 2.0 * a1 + 2.0, r2 = -k * (1.0 + a1);
  const double det = m11 * m22 - m12 * m21;
  const double det_scale = std::abs(m11 * m22) + std::abs(m12 * m21);
  if (!(std::abs(det) > kDegenerateTolerance * det_scale)) {
    throw Error(ErrorCode::SingularRecovery, "(P, Q) system is singular");
  }
  const double P = (r1 * m22 - m12 * r2) / det;
  const double Q = (m11 * r2 - r1 * m21) / det;
  if (!(std::abs(Q) > kDegenerateTolerance * std::abs(P))) {
    // Q = HR k^2 vanishes: T = P/(Qk) and HR are undetermined.
    throw Error(ErrorCode::SingularRecovery, "H*R term is numerically zero");
  }

  const double T = P / (Q * k);
  const double HR = Q / (k * k);
  require_positive_result(T, "T");
  require_positive_result(HR, "H*R");
  const double alpha = 2.0 * P + 2.0 * Q + k;
  const double R = b3 * alpha / (1.0 + T * k);
  return physical(HR / R, R, T);
}

GeneratorParams recover(const ArxModel& c) {
  if (c.output == Output::Omega) {
    return c.method == Method::Zoh ? recover_zoh_omega(c) : recover_tustin_omega(c);
  }
  return c.method == Method::Zoh ? recover_zoh_delta(c) : recover_tustin_delta(c);
}

CoefficientEstimate estimate_coefficients(const TimeSeries& u, const TimeSeries& y, Method method,
                                          Output output) {
  const auto [n, m] = model_order(method, output);
  const RegressionProblem prob = build_regression(y, u, n, m);
  const LseSolution sol = solve_lse(prob);
  CoefficientEstimate est{model_from_solution(sol, method, output, u.h), residual_stats(prob, sol),
                          sol.residual_norm, sol.condition_estimate,
                          static_cast<std::size_t>(prob.A.rows())};
  return est;
}

EstimationResult estimate(const TimeSeries& u, const TimeSeries& y, Method method, Output output) {
  CoefficientEstimate coeffs = estimate_coefficients(u, y, method, output);
  const GeneratorParams params = recover(coeffs.model);
  std::vector<std::string> warnings;
  if (coeffs.condition_estimate > 1e8) {
    warnings.push_back("regression is ill-conditioned (condition estimate " +
                       std::to_string(coeffs.condition_estimate) + ")");
  }
  return EstimationResult{method, output, u.h, std::move(coeffs), params, std::move(warnings)};
}

}  // namespace arxid
