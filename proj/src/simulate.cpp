#include "arxid/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "arxid/error.hpp"

namespace arxid {

void TimeSeries::check() const {
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "time series is empty");
  if (!std::isfinite(h) || !(h > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "sampling interval must be finite and > 0");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::InvalidArgument, "non-finite sample at index " + std::to_string(i));
    }
  }
}

bool same_sampling(double h1, double h2) {
  return std::abs(h1 - h2) <= kSamplingTolerance * std::max(std::abs(h1), std::abs(h2));
}

void ScenarioConfig::check() const {
  if (!(step_time >= 0.0) || !(duration > step_time)) {
    throw Error(ErrorCode::InvalidArgument, "scenario needs duration > step_time >= 0");
  }
  if (!(noise_variance >= 0.0) || !(output_noise_variance >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "noise variance must be >= 0");
  }
  if (!std::isfinite(step_amplitude)) {
    throw Error(ErrorCode::InvalidArgument, "step amplitude must be finite");
  }
}

GaussianSource::GaussianSource(std::uint64_t seed) : engine_(seed) {}

double GaussianSource::next_uniform() {
  // 53 random mantissa bits, shifted to (0, 1] so log() is finite.
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianSource::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double radius = std::sqrt(-2.0 * std::log(next_uniform()));
  const double angle = 2.0 * std::numbers::pi * next_uniform();
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

namespace {

std::size_t sample_count(double duration, double h) {
  // Guard against 15/0.1 landing just below 150.
  return static_cast<std::size_t>(std::floor(duration / h * (1.0 + 1e-12))) + 1;
}

}  // namespace

TimeSeries step_signal(const ScenarioConfig& cfg, double h) {
  cfg.check();
  if (!std::isfinite(h) || !(h > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "sampling interval must be finite and > 0");
  }
  const std::size_t n = sample_count(cfg.duration, h);
  const auto first_on = static_cast<std::size_t>(std::ceil(cfg.step_time / h * (1.0 - 1e-12)));
  TimeSeries s;
  s.h = h;
  s.values.assign(n, 0.0);
  for (std::size_t i = first_on; i < n; ++i) s.values[i] = cfg.step_amplitude;
  return s;
}

TimeSeries add_gaussian_noise(const TimeSeries& s, double variance, std::uint64_t seed) {
  if (!(variance >= 0.0)) throw Error(ErrorCode::InvalidArgument, "noise variance must be >= 0");
  TimeSeries out = s;
  if (variance == 0.0) return out;
  const double sigma = std::sqrt(variance);
  GaussianSource source(seed);
  for (double& v : out.values) v += sigma * source.next();
  return out;
}

TimeSeries simulate_arx(const ArxModel& model, const TimeSeries& u) {
  model.check();
  u.check();
  if (!same_sampling(model.h, u.h)) {
    throw Error(ErrorCode::SamplingMismatch, "model h = " + std::to_string(model.h) +
                                                 " but input h = " + std::to_string(u.h));
  }
  const std::size_t n = model.n();
  const std::size_t delay = n - model.m();
  const std::size_t len = u.size();
  TimeSeries y;
  y.h = u.h;
  y.t0 = u.t0;
  y.values.assign(len, 0.0);
  for (std::size_t k = 0; k < len; ++k) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= n && j <= k; ++j) acc -= model.den[j - 1] * y.values[k - j];
    for (std::size_t j = 0; j < model.num.size(); ++j) {
      const std::size_t lag = delay + j;
      if (lag <= k) acc += model.num[j] * u.values[k - lag];
    }
    y.values[k] = acc;
  }
  return y;
}

TimeSeries analytic_step_response_omega(const GeneratorParams& p, double amplitude, double h,
                                        std::size_t n) {
  const DerivedConstants dc = derived_constants_omega(p);
  const double sigma = 1.0 / (2.0 * p.T());
  TimeSeries y;
  y.h = h;
  y.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * h;
    y.values[i] = amplitude * p.R() *
                  (1.0 - std::exp(-sigma * t) *
                             (std::cos(dc.omega * t) + dc.k * std::sin(dc.omega * t)));
  }
  return y;
}

Dataset generate_dataset(const GeneratorParams& p, double h, Method method, Output output,
                         const ScenarioConfig& cfg) {
  const ArxModel model = discretize(p, h, method, output);
  Dataset data;
  data.u = add_gaussian_noise(step_signal(cfg, h), cfg.noise_variance, cfg.rng_seed);
  data.y = simulate_arx(model, data.u);
  if (cfg.output_noise_variance > 0.0) {
    // Separate stream so toggling output noise leaves the input untouched.
    data.y = add_gaussian_noise(data.y, cfg.output_noise_variance,
                                cfg.rng_seed ^ 0x9E3779B97F4A7C15ULL);
  }
  return data;
}

}  // namespace arxid
