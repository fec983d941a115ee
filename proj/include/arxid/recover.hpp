#pragma once

// Maps estimated ARX coefficients back to (H, R, T) with D = 0.
//
// ZOH/omega:    T = -h/ln(a0), w = acos(-a1 e^{h/2T} / 2)/h,
//               R = (b1 + b0)/(1 + e^{-h/T} + a1), H = 2T/(R (1 + 4 T^2 w^2)).
// Tustin/omega: T = (2 b2/b1 - 1)/k, k = 2/h; the a1 equation fixes the
//               product HR, the b2 equation then fixes R.
// ZOH/delta:    T = -h/ln(-a0), w from a2, HR = 2T/(1 + 4 w^2 T^2), R from b2.
// Tustin/delta: with P = HR T k^3 and Q = HR k^2 the a2 and a1 equations are
//               linear in (P, Q); then T = P/(Qk), HR = Q/k^2, R from b3.
//
// Only the principal arccos branch is used, matching the folding guard in
// discretize().

#include <string>
#include <vector>

#include "arxid/discretize.hpp"
#include "arxid/model.hpp"
#include "arxid/regression.hpp"
#include "arxid/simulate.hpp"

namespace arxid {

GeneratorParams recover_zoh_omega(const ArxModel& c);
GeneratorParams recover_tustin_omega(const ArxModel& c);
GeneratorParams recover_zoh_delta(const ArxModel& c);
GeneratorParams recover_tustin_delta(const ArxModel& c);

GeneratorParams recover(const ArxModel& c);

struct CoefficientEstimate {
  ArxModel model;
  ResidualStats residuals;
  double residual_norm = 0.0;
  double condition_estimate = 0.0;
  std::size_t rows = 0;
};

// Regression plus solve; no physical interpretation yet.
CoefficientEstimate estimate_coefficients(const TimeSeries& u, const TimeSeries& y, Method method,
                                          Output output);

struct EstimationResult {
  Method method = Method::Zoh;
  Output output = Output::Omega;
  double h = 0.0;
  CoefficientEstimate coefficients;
  GeneratorParams params;
  std::vector<std::string> warnings;
};

// Full pipeline: regression, least squares, recovery. Recovery failures
// propagate as Error with the recovery code.
EstimationResult estimate(const TimeSeries& u, const TimeSeries& y, Method method, Output output);

}  // namespace arxid
