#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arxid/discretize.hpp"
#include "arxid/model.hpp"

namespace arxid {

// Uniformly sampled signal; sample i is at t0 + i*h.
struct TimeSeries {
  double h = 0.0;
  double t0 = 0.0;
  std::vector<double> values;
  std::string unit = "p.u.";

  std::size_t size() const noexcept { return values.size(); }
  double time_at(std::size_t i) const noexcept { return t0 + static_cast<double>(i) * h; }

  // Throws InvalidArgument on empty values, h <= 0 or non-finite samples.
  void check() const;
};

// Relative tolerance used when comparing sampling intervals of two series.
inline constexpr double kSamplingTolerance = 1e-9;
bool same_sampling(double h1, double h2);

struct ScenarioConfig {
  double step_amplitude = 0.2;
  double step_time = 1.0;
  double duration = 15.0;
  double noise_variance = 1e-4;
  std::uint64_t rng_seed = 1;
  // Measurement noise on the recorded output; off unless asked for.
  double output_noise_variance = 0.0;

  void check() const;
};

inline constexpr const char* kRngName = "mt19937_64/box-muller";

// Unit-variance Gaussian samples from a seeded mt19937_64 through the
// Box-Muller transform. std::normal_distribution is implementation-defined,
// this is not: identical seeds give identical streams on every platform.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed);
  double next();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;

  double next_uniform();  // (0, 1]
};

TimeSeries step_signal(const ScenarioConfig& cfg, double h);

TimeSeries add_gaussian_noise(const TimeSeries& s, double variance, std::uint64_t seed);

// Runs the difference equation with zero pre-history. When m == n the
// current input u(k) enters directly.
TimeSeries simulate_arx(const ArxModel& model, const TimeSeries& u);

// Exact continuous response of the omega path to a step applied at t = 0,
// sampled at t = k*h for k = 0..n-1:
//   amplitude * R * (1 - exp(-t/2T) (cos(wt) + k sin(wt)))
TimeSeries analytic_step_response_omega(const GeneratorParams& p, double amplitude, double h,
                                        std::size_t n);

struct Dataset {
  TimeSeries u;
  TimeSeries y;
};

// Benchmark scenario: noisy step drives the discrete model built with
// `method`, so the recorded input is exactly what excited the plant.
Dataset generate_dataset(const GeneratorParams& p, double h, Method method, Output output,
                         const ScenarioConfig& cfg);

}  // namespace arxid
