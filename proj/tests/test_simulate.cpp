#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "arxid/discretize.hpp"
#include "arxid/simulate.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

namespace arxid {
namespace {

using testing::code_of;

const GeneratorParams kBench = GeneratorParams::create(2.5, 0.05, 0.5);

ScenarioConfig clean_step(double amplitude = 0.2, double step_time = 1.0, double duration = 15.0) {
  ScenarioConfig cfg;
  cfg.step_amplitude = amplitude;
  cfg.step_time = step_time;
  cfg.duration = duration;
  cfg.noise_variance = 0.0;
  return cfg;
}

TEST(StepSignalTest, BenchmarkStepEdge) {
  const TimeSeries s = step_signal(clean_step(), 0.1);
  EXPECT_EQ(s.size(), 151u);
  EXPECT_EQ(s.values[9], 0.0);
  EXPECT_EQ(s.values[10], 0.2);
  EXPECT_EQ(s.values.back(), 0.2);
}

TEST(StepSignalTest, ZeroAmplitudeAndStepAtOrigin) {
  const TimeSeries zero = step_signal(clean_step(0.0), 0.1);
  EXPECT_TRUE(std::all_of(zero.values.begin(), zero.values.end(), [](double v) { return v == 0.0; }));
  const TimeSeries origin = step_signal(clean_step(0.2, 0.0, 1.0), 0.5);
  EXPECT_EQ(origin.values, (std::vector<double>{0.2, 0.2, 0.2}));
}

TEST(StepSignalTest, LengthAtSmallIntervals) {
  EXPECT_EQ(step_signal(clean_step(), 0.01).size(), 1501u);
  EXPECT_EQ(step_signal(clean_step(), 0.001).size(), 15001u);
  const TimeSeries s = step_signal(clean_step(), 0.001);
  EXPECT_EQ(s.values[999], 0.0);
  EXPECT_EQ(s.values[1000], 0.2);
}

TEST(ScenarioConfigTest, RejectsInvalid) {
  ScenarioConfig cfg = clean_step();
  cfg.duration = 0.5;
  EXPECT_EQ(code_of([&] { cfg.check(); }), ErrorCode::InvalidArgument);
  cfg = clean_step();
  cfg.noise_variance = -1.0;
  EXPECT_EQ(code_of([&] { cfg.check(); }), ErrorCode::InvalidArgument);
}

TEST(GaussianNoiseTest, ZeroVarianceIsIdentity) {
  const TimeSeries s = step_signal(clean_step(), 0.1);
  EXPECT_EQ(add_gaussian_noise(s, 0.0, 42).values, s.values);
}

TEST(GaussianNoiseTest, DeterministicPerSeed) {
  const TimeSeries s = step_signal(clean_step(), 0.1);
  EXPECT_EQ(add_gaussian_noise(s, 1e-4, 42).values, add_gaussian_noise(s, 1e-4, 42).values);
  EXPECT_NE(add_gaussian_noise(s, 1e-4, 42).values, add_gaussian_noise(s, 1e-4, 43).values);
}

TEST(GaussianNoiseTest, FrozenStream) {
  // Pins the generator so datasets stay reproducible across releases.
  GaussianSource g(1);
  const double first = g.next();
  GaussianSource again(1);
  EXPECT_EQ(again.next(), first);
  std::mt19937_64 eng(1);
  const double u1 = (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53;
  EXPECT_DOUBLE_EQ(first, std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2));
}

TEST(GaussianNoiseTest, MomentsWithinBounds) {
  TimeSeries zeros{0.01, 0.0, std::vector<double>(10000, 0.0), "p.u."};
  for (std::uint64_t seed : {1u, 2u, 3u, 99u, 12345u}) {
    const TimeSeries noisy = add_gaussian_noise(zeros, 1e-4, seed);
    const double n = static_cast<double>(noisy.size());
    const double mean = std::accumulate(noisy.values.begin(), noisy.values.end(), 0.0) / n;
    double var = 0.0;
    for (double v : noisy.values) var += (v - mean) * (v - mean);
    var /= n - 1.0;
    EXPECT_LT(std::abs(mean), 4.0 * std::sqrt(1e-4 / n));
    EXPECT_GE(var, 0.8e-4);
    EXPECT_LE(var, 1.2e-4);
  }
}

TEST(SimulateArxTest, ZeroInputZeroOutput) {
  const TimeSeries u{0.1, 0.0, std::vector<double>(50, 0.0), "p.u."};
  const TimeSeries y = simulate_arx(tustin_delta(kBench, 0.1), u);
  EXPECT_TRUE(std::all_of(y.values.begin(), y.values.end(), [](double v) { return v == 0.0; }));
  EXPECT_EQ(y.size(), u.size());
}

TEST(SimulateArxTest, SamplingMismatch) {
  const TimeSeries u = step_signal(clean_step(), 0.01);
  EXPECT_EQ(code_of([&] { simulate_arx(zoh_omega(kBench, 0.1), u); }), ErrorCode::SamplingMismatch);
}

TEST(SimulateArxTest, SettlesToDroopTimesStep) {
  const TimeSeries y = simulate_arx(zoh_omega(kBench, 0.1), step_signal(clean_step(), 0.1));
  EXPECT_NEAR(y.values.back(), 0.01, 1e-6);
}

TEST(SimulateArxTest, TustinFeedthroughAtStepInstant) {
  const ArxModel m = tustin_omega(kBench, 0.1);
  const TimeSeries y = simulate_arx(m, step_signal(clean_step(), 0.1));
  EXPECT_EQ(y.values[9], 0.0);
  EXPECT_DOUBLE_EQ(y.values[10], m.num[0] * 0.2);
  // ZOH has one sample of delay.
  const TimeSeries yz = simulate_arx(zoh_omega(kBench, 0.1), step_signal(clean_step(), 0.1));
  EXPECT_EQ(yz.values[10], 0.0);
  EXPECT_NE(yz.values[11], 0.0);
}

TEST(SimulateArxTest, HandComputedRecursion) {
  ArxModel m;
  m.h = 1.0;
  m.den = {-0.5, 0.25};
  m.num = {1.0, 2.0};
  const TimeSeries u{1.0, 0.0, {1.0, 0.0, 0.0, 0.0}, ""};
  // y0 = 0; y1 = b1 u0 = 1; y2 = 0.5 y1 + b0 u0 = 2.5; y3 = 0.5 y2 - 0.25 y1 = 1.0
  const TimeSeries y = simulate_arx(m, u);
  EXPECT_EQ(y.values, (std::vector<double>{0.0, 1.0, 2.5, 1.0}));
}

TEST(SimulateArxTest, Linearity) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> nd;
  TimeSeries u{0.1, 0.0, std::vector<double>(500), ""};
  for (double& v : u.values) v = nd(rng);
  for (const ArxModel& m : {zoh_omega(kBench, 0.1), tustin_omega(kBench, 0.1),
                            zoh_delta(kBench, 0.1), tustin_delta(kBench, 0.1)}) {
    TimeSeries doubled = u;
    for (double& v : doubled.values) v *= 2.0;
    // Power-of-two scaling commutes exactly with floating-point arithmetic.
    std::vector<double> twice = simulate_arx(m, u).values;
    for (double& v : twice) v *= 2.0;
    EXPECT_EQ(simulate_arx(m, doubled).values, twice);

    TimeSeries scaled = u;
    for (double& v : scaled.values) v *= -3.7;
    const TimeSeries y1 = simulate_arx(m, u), y2 = simulate_arx(m, scaled);
    double scale = 0.0;
    for (double v : y2.values) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < y1.size(); ++i) {
      EXPECT_NEAR(y2.values[i], -3.7 * y1.values[i], 1e-12 * scale);
    }
  }
}

TEST(AnalyticStepTest, Endpoints) {
  const TimeSeries y = analytic_step_response_omega(kBench, 0.2, 0.1, 2001);
  EXPECT_EQ(y.values.front(), 0.0);
  EXPECT_NEAR(y.values.back(), 0.2 * 0.05, 1e-15);
}

TEST(AnalyticStepTest, MatchesStateSpaceOracle) {
  const std::vector<double> u(300, 1.0);
  const auto ref = oracle::continuous_response(oracle::omega_tf(2.5, 0.05, 0.5), u, 0.05, true);
  // ref[i] is the response at t = i h to a step held from t = 0.
  const TimeSeries y = analytic_step_response_omega(kBench, 1.0, 0.05, 300);
  for (std::size_t i = 0; i < u.size(); ++i) EXPECT_NEAR(y.values[i], ref[i], 1e-13);
}

// Sampled ZOH model reproduces the continuous response exactly at sample
// instants for any piecewise-constant input.
TEST(ZohExactnessTest, StepResponseMatchesAnalytic) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> H(1.0, 10.0), R(0.02, 0.1), T(0.2, 1.0);
  for (double h : {0.1, 0.01, 0.001}) {
    int checked = 0;
    while (checked < 8) {
      const double h_ = H(rng), r = R(rng), t = T(rng);
      if (!(2.0 * t > h_ * r)) continue;
      const auto p = GeneratorParams::create(h_, r, t);
      const ScenarioConfig cfg = clean_step(0.2, 0.0, 10.0);
      const TimeSeries u = step_signal(cfg, h);
      const TimeSeries y = simulate_arx(zoh_omega(p, h), u);
      const TimeSeries ya = analytic_step_response_omega(p, 0.2, h, u.size());
      double worst = 0.0;
      for (std::size_t i = 0; i < y.size(); ++i) worst = std::max(worst, std::abs(y.values[i] - ya.values[i]));
      EXPECT_LT(worst, 1e-9) << "h=" << h;
      ++checked;
    }
  }
}

TEST(ZohExactnessTest, RandomPiecewiseConstantInputBothOutputs) {
  std::mt19937_64 rng(37);
  std::normal_distribution<double> nd(0.0, 0.1);
  const double h = 0.02;
  std::vector<double> u(800);
  for (double& v : u) v = nd(rng);
  const TimeSeries series{h, 0.0, u, ""};
  const auto yo = oracle::continuous_response(oracle::omega_tf(2.5, 0.05, 0.5), u, h, true);
  const auto yd = oracle::continuous_response(oracle::delta_tf(2.5, 0.05, 0.5), u, h, true);
  const TimeSeries so = simulate_arx(zoh_omega(kBench, h), series);
  const TimeSeries sd = simulate_arx(zoh_delta(kBench, h), series);
  for (std::size_t i = 0; i < u.size(); ++i) {
    EXPECT_NEAR(so.values[i], yo[i], 1e-12);
    EXPECT_NEAR(sd.values[i], yd[i], 1e-11);
  }
}

// The trapezoidal rule integrates the piecewise-linear interpolation of the
// samples; against that continuous response Tustin is second order.
TEST(TustinAccuracyTest, SecondOrderConvergence) {
  double prev = 0.0;
  for (double h : {0.1, 0.05, 0.025, 0.0125}) {
    const TimeSeries u = step_signal(clean_step(1.0), h);
    const TimeSeries y = simulate_arx(tustin_omega(kBench, h), u);
    const auto ref = oracle::continuous_response(oracle::omega_tf(2.5, 0.05, 0.5), u.values, h, false);
    double worst = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) worst = std::max(worst, std::abs(y.values[i] - ref[i]));
    if (prev > 0.0) {
      const double ratio = prev / worst;
      EXPECT_GE(ratio, 3.2) << "h=" << h;
      EXPECT_LE(ratio, 4.8) << "h=" << h;
    }
    prev = worst;
  }
  EXPECT_LT(prev, 1e-5);
}

TEST(GenerateDatasetTest, NoisyInputDrivesPlant) {
  ScenarioConfig cfg;
  cfg.rng_seed = 5;
  const Dataset d = generate_dataset(kBench, 0.1, Method::Zoh, Output::Omega, cfg);
  EXPECT_EQ(d.u.size(), 151u);
  EXPECT_EQ(simulate_arx(zoh_omega(kBench, 0.1), d.u).values, d.y.values);
  EXPECT_NE(d.u.values[3], 0.0);
}

TEST(GenerateDatasetTest, OutputNoiseLeavesInputUntouched) {
  ScenarioConfig cfg;
  cfg.rng_seed = 5;
  const Dataset clean = generate_dataset(kBench, 0.1, Method::Tustin, Output::Delta, cfg);
  cfg.output_noise_variance = 1e-8;
  const Dataset noisy = generate_dataset(kBench, 0.1, Method::Tustin, Output::Delta, cfg);
  EXPECT_EQ(clean.u.values, noisy.u.values);
  EXPECT_NE(clean.y.values, noisy.y.values);
}

TEST(GenerateDatasetTest, DeltaOutputRamps) {
  const Dataset d = generate_dataset(kBench, 0.1, Method::Zoh, Output::Delta, clean_step());
  // integral of a settled 0.01 p.u. speed deviation: slope 0.01 per second
  const double slope = (d.y.values[150] - d.y.values[140]) / 1.0;
  EXPECT_NEAR(slope, 0.01, 1e-5);
}

}  // namespace
}  // namespace arxid
