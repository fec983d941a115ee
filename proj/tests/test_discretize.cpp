#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "arxid/discretize.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

namespace arxid {
namespace {

using testing::code_of;

const GeneratorParams kBench = GeneratorParams::create(2.5, 0.05, 0.5);

void expect_coeffs(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
}

// Golden vectors frozen from an independent state-space discretization
// (scipy.signal.cont2discrete, cross-checked at 40 digits with mpmath).
TEST(ZohOmegaTest, GoldenBenchmark) {
  const ArxModel m = zoh_omega(kBench, 0.1);
  EXPECT_EQ(m.n(), 2u);
  EXPECT_EQ(m.m(), 1u);
  expect_coeffs(m.den, {-1.7467048310562474, 0.81873075307798186}, 1e-14);
  expect_coeffs(m.num, {0.019747147236104723, -0.016145851135018002}, 1e-15);
  EXPECT_DOUBLE_EQ(m.den[1], std::exp(-0.2));
}

TEST(ZohOmegaTest, CloseToNoisyEstimates) {
  const ArxModel m = zoh_omega(kBench, 0.1);
  expect_coeffs(m.den, {-1.7467, 0.8185742}, 2e-3);
  expect_coeffs(m.num, {0.0197333, -0.0161380}, 2e-3);
}

TEST(ZohOmegaTest, SmallIntervalLimit) {
  const ArxModel m = zoh_omega(kBench, 1e-7);
  EXPECT_NEAR(m.den[0], -2.0, 1e-6);
  EXPECT_NEAR(m.den[1], 1.0, 1e-6);
}

TEST(ZohOmegaTest, FoldedSamplingGuard) {
  const double omega = std::sqrt(7.0);
  EXPECT_EQ(code_of([&] { zoh_omega(kBench, std::numbers::pi / omega); }),
            ErrorCode::FoldedSampling);
  EXPECT_EQ(code_of([&] { zoh_delta(kBench, 2.0); }), ErrorCode::FoldedSampling);
  EXPECT_NO_THROW(zoh_omega(kBench, 0.99 * std::numbers::pi / omega));
  // Tustin has no folding.
  EXPECT_NO_THROW(tustin_omega(kBench, 2.0));
}

TEST(ZohOmegaTest, RejectsDampingAndBadInterval) {
  const auto damped = GeneratorParams::create(2.5, 0.05, 0.5, 0.8);
  EXPECT_EQ(code_of([&] { zoh_omega(damped, 0.1); }), ErrorCode::NonZeroDamping);
  EXPECT_EQ(code_of([&] { tustin_delta(damped, 0.1); }), ErrorCode::NonZeroDamping);
  EXPECT_EQ(code_of([&] { zoh_omega(kBench, 0.0); }), ErrorCode::InvalidArgument);
}

TEST(TustinOmegaTest, MatchesRoundedReference) {
  const ArxModel m = tustin_omega(kBench, 0.1);
  EXPECT_EQ(m.n(), 2u);
  EXPECT_EQ(m.m(), 2u);
  // alpha = 56 exactly
  EXPECT_NEAR(m.den[0], -98.0 / 56.0, 1e-15);
  EXPECT_NEAR(m.den[1], 46.0 / 56.0, 1e-15);
  EXPECT_NEAR(m.num[0], 0.55 / 56.0, 1e-16);
  EXPECT_NEAR(m.num[1], 0.1 / 56.0, 1e-16);
  EXPECT_NEAR(m.num[2], -0.45 / 56.0, 1e-16);
  expect_coeffs(m.den, {-1.7500, 0.8214286}, 5e-8);
  expect_coeffs(m.num, {9.8214e-3, 1.7857e-3, -8.0357e-3}, 5e-8);
}

TEST(TustinOmegaTest, NumeratorIdentities) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> H(1.0, 10.0), R(0.02, 0.1), T(0.2, 1.0), hs(0.001, 0.2);
  for (int i = 0; i < 200; ++i) {
    const double h_ = H(rng), r = R(rng), t = T(rng);
    if (!(2.0 * t > h_ * r)) continue;
    const auto p = GeneratorParams::create(h_, r, t);
    const double h = hs(rng);
    const ArxModel m = tustin_omega(p, h);
    const double k = 2.0 / h;
    const double alpha = 2.0 * h_ * r * t * k * k + 2.0 * h_ * r * k + 1.0;
    EXPECT_NEAR(m.num[1], 2.0 * r / alpha, 1e-15 * std::abs(m.num[1]) + 1e-300);
    EXPECT_NEAR(m.num[0] + m.num[2], m.num[1], 1e-12 * std::abs(m.num[0]));
  }
}

TEST(ZohDeltaTest, GoldenBenchmark) {
  const ArxModel m = zoh_delta(kBench, 0.1);
  EXPECT_EQ(m.n(), 3u);
  EXPECT_EQ(m.m(), 2u);
  expect_coeffs(m.den, {-2.746704831056247, 2.565435584134229, -0.8187307530779816}, 1e-14);
  expect_coeffs(m.num, {0.0009936081340193859, 0.0001795836019518049, -0.0008130621258624071},
                1e-15);
  EXPECT_NEAR(m.den[2], -0.818731, 1e-6);
}

TEST(ZohDeltaTest, SmallIntervalLimit) {
  const ArxModel m = zoh_delta(kBench, 1e-7);
  EXPECT_NEAR(m.den[0], -3.0, 1e-6);
  EXPECT_NEAR(m.den[1], 3.0, 1e-6);
  EXPECT_NEAR(m.den[2], -1.0, 1e-6);
}

TEST(TustinDeltaTest, GoldenBenchmark) {
  const ArxModel m = tustin_delta(kBench, 0.1);
  EXPECT_EQ(m.num.size(), 4u);
  EXPECT_EQ(m.den.size(), 3u);
  // k = 20, alpha = 1120
  EXPECT_NEAR(m.den[0], -2.75, 1e-15);
  expect_coeffs(m.den, {-2.75, 2.571428571428572, -0.8214285714285716}, 1e-14);
  expect_coeffs(m.num,
                {0.0004910714285714102, 0.0005803571428564247, -0.0003124999999997158,
                 -0.00040178571428584053},
                1e-15);
  const double sum = m.num[0] + m.num[1] + m.num[2] + m.num[3];
  EXPECT_NEAR(sum, 8.0 * 0.05 / 1120.0, 1e-17);
}

// Every closed form against the independent state-space / substitution
// oracle over random parameters.
TEST(DiscretizeOracleTest, RandomParametersMatchOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> H(1.0, 10.0), R(0.02, 0.1), T(0.2, 1.0);
  const double hs[] = {0.1, 0.05, 0.01};
  int checked = 0;
  while (checked < 60) {
    const double h_ = H(rng), r = R(rng), t = T(rng);
    if (!(2.0 * t > h_ * r)) continue;
    const auto p = GeneratorParams::create(h_, r, t);
    for (double h : hs) {
      const auto zo = oracle::zoh(oracle::omega_tf(h_, r, t), h);
      const auto to = oracle::bilinear(oracle::omega_tf(h_, r, t), h);
      const auto zd = oracle::zoh(oracle::delta_tf(h_, r, t), h);
      const auto td = oracle::bilinear(oracle::delta_tf(h_, r, t), h);
      const ArxModel m1 = zoh_omega(p, h), m2 = tustin_omega(p, h), m3 = zoh_delta(p, h),
                     m4 = tustin_delta(p, h);
      expect_coeffs(m1.den, zo.den, 1e-10);
      expect_coeffs(m1.num, zo.num, 1e-10 * r);
      expect_coeffs(m2.den, to.den, 1e-12);
      expect_coeffs(m2.num, to.num, 1e-12 * r);
      expect_coeffs(m3.den, zd.den, 1e-10);
      expect_coeffs(m3.num, zd.num, 1e-10 * r * h);
      expect_coeffs(m4.den, td.den, 1e-12);
      expect_coeffs(m4.num, td.num, 1e-12 * r * h);
    }
    ++checked;
  }
}

TEST(PoleMappingTest, ZohPolesAreExponentialImages) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> H(1.0, 10.0), R(0.02, 0.1), T(0.2, 1.0), hs(0.001, 0.3);
  int checked = 0;
  while (checked < 200) {
    const double h_ = H(rng), r = R(rng), t = T(rng), h = hs(rng);
    if (!(2.0 * t > h_ * r)) continue;
    const auto p = GeneratorParams::create(h_, r, t);
    const auto s = continuous_poles(p);
    if (s.im * h >= std::numbers::pi) continue;
    const std::complex<double> want = std::exp(std::complex<double>(s.re, s.im) * h);
    const auto got = poles(zoh_omega(p, h));
    ASSERT_EQ(got.size(), 2u);
    const double d = std::min(std::abs(got[0] - want), std::abs(got[1] - want));
    EXPECT_LT(d, 1e-10 * std::abs(want));
    const double dconj = std::min(std::abs(got[0] - std::conj(want)), std::abs(got[1] - std::conj(want)));
    EXPECT_LT(dconj, 1e-10 * std::abs(want));
    ++checked;
  }
}

TEST(PoleMappingTest, TustinPolesInsideUnitCircle) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> H(0.5, 15.0), R(0.01, 0.2), T(0.05, 3.0);
  std::uniform_real_distribution<double> log_h(std::log(1e-3), std::log(2.0));
  int checked = 0;
  while (checked < 500) {
    const double h_ = H(rng), r = R(rng), t = T(rng);
    if (!(2.0 * t > h_ * r)) continue;
    const auto p = GeneratorParams::create(h_, r, t);
    const double h = std::exp(log_h(rng));
    for (const auto& z : poles(tustin_omega(p, h))) EXPECT_LT(std::abs(z), 1.0);
    // Delta model: integrator maps to z = 1, the rest strictly inside.
    for (const auto& z : poles(tustin_delta(p, h))) {
      if (std::abs(z - 1.0) > 1e-6) EXPECT_LT(std::abs(z), 1.0);
    }
    ++checked;
  }
}

TEST(DcConsistencyTest, OmegaModelsPreserveDroopGain) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> H(1.0, 10.0), R(0.02, 0.1), T(0.2, 1.0), hs(0.001, 0.3);
  int checked = 0;
  while (checked < 200) {
    const double h_ = H(rng), r = R(rng), t = T(rng), h = hs(rng);
    if (!(2.0 * t > h_ * r)) continue;
    const auto p = GeneratorParams::create(h_, r, t);
    if (derived_constants_omega(p).omega * h >= std::numbers::pi) continue;
    EXPECT_NEAR(evaluate(zoh_omega(p, h), 1.0).real(), r, 1e-10 * r);
    EXPECT_NEAR(evaluate(tustin_omega(p, h), 1.0).real(), r, 1e-10 * r);
    ++checked;
  }
}

TEST(DeltaModelTest, DenominatorHasIntegratorRoot) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> H(1.0, 10.0), R(0.02, 0.1), T(0.2, 1.0), hs(0.001, 0.3);
  int checked = 0;
  while (checked < 200) {
    const double h_ = H(rng), r = R(rng), t = T(rng), h = hs(rng);
    if (!(2.0 * t > h_ * r)) continue;
    const auto p = GeneratorParams::create(h_, r, t);
    if (derived_constants_omega(p).omega * h >= std::numbers::pi) continue;
    for (const ArxModel& m : {zoh_delta(p, h), tustin_delta(p, h)}) {
      const double at_one = 1.0 + m.den[0] + m.den[1] + m.den[2];
      EXPECT_NEAR(at_one, 0.0, 1e-10);
    }
    ++checked;
  }
}

TEST(ArxModelTest, LabelsAndLookup) {
  const ArxModel m = tustin_omega(kBench, 0.1);
  const std::vector<std::string> want = {"a1", "a0", "b2", "b1", "b0"};
  EXPECT_EQ(m.labels(), want);
  EXPECT_EQ(m.coefficient("b2"), m.num[0]);
  EXPECT_EQ(m.coefficient("a0"), m.den[1]);
  EXPECT_EQ(code_of([&] { m.coefficient("b3"); }), ErrorCode::InvalidArgument);
}

TEST(ArxModelTest, CheckRejectsWrongShape) {
  ArxModel m = zoh_omega(kBench, 0.1);
  m.num.push_back(0.0);
  EXPECT_EQ(code_of([&] { m.check(); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(model_order(Method::Tustin, Output::Delta).m, 3u);
  EXPECT_EQ(model_order(Method::Zoh, Output::Delta).m, 2u);
}

TEST(ParseTest, MethodAndOutputNames) {
  EXPECT_EQ(parse_method("zoh"), Method::Zoh);
  EXPECT_EQ(parse_method("tustin"), Method::Tustin);
  EXPECT_EQ(parse_output("delta"), Output::Delta);
  EXPECT_EQ(code_of([] { parse_method("euler"); }), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace arxid
