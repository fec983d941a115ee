#include "arxid/discretize.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

#include "arxid/error.hpp"

namespace arxid {

std::string_view to_string(Method m) { return m == Method::Zoh ? "zoh" : "tustin"; }
std::string_view to_string(Output o) { return o == Output::Omega ? "omega" : "delta"; }

Method parse_method(std::string_view s) {
  if (s == "zoh") return Method::Zoh;
  if (s == "tustin") return Method::Tustin;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + std::string(s) + "'");
}

Output parse_output(std::string_view s) {
  if (s == "omega") return Output::Omega;
  if (s == "delta") return Output::Delta;
  throw Error(ErrorCode::InvalidArgument, "unknown output '" + std::string(s) + "'");
}

ModelOrder model_order(Method method, Output output) {
  const std::size_t n = output == Output::Omega ? 2 : 3;
  return {n, method == Method::Zoh ? n - 1 : n};
}

std::vector<std::string> ArxModel::labels() const {
  std::vector<std::string> out;
  out.reserve(den.size() + num.size());
  for (std::size_t i = 0; i < den.size(); ++i) out.push_back("a" + std::to_string(den.size() - 1 - i));
  for (std::size_t i = 0; i < num.size(); ++i) out.push_back("b" + std::to_string(num.size() - 1 - i));
  return out;
}

double ArxModel::coefficient(std::string_view label) const {
  if (label.size() >= 2 && (label[0] == 'a' || label[0] == 'b')) {
    const auto& v = label[0] == 'a' ? den : num;
    const std::size_t power = std::stoul(std::string(label.substr(1)));
    if (power < v.size()) return v[v.size() - 1 - power];
  }
  throw Error(ErrorCode::InvalidArgument, "no coefficient '" + std::string(label) + "'");
}

void ArxModel::check() const {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorCode::InvalidArgument, "sampling interval must be > 0");
  }
  const auto [n_expected, m_expected] = model_order(method, output);
  if (den.size() != n_expected || num.size() != m_expected + 1) {
    throw Error(ErrorCode::InvalidArgument,
                "coefficient shape does not match " + std::string(to_string(method)) + "/" +
                    std::string(to_string(output)));
  }
  for (double c : den) {
    if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "non-finite coefficient");
  }
  for (double c : num) {
    if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "non-finite coefficient");
  }
}

namespace {

void check_interval(double h) {
  if (!std::isfinite(h) || !(h > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "sampling interval must be finite and > 0");
  }
}

// Shared exponential/trigonometric terms of both ZOH forms.
struct ZohTerms {
  double e_half;  // exp(-h/2T)
  double e_full;  // exp(-h/T)
  double c;       // cos(omega h)
  double s;       // sin(omega h)
  DerivedConstants dc;
};

ZohTerms zoh_terms(const GeneratorParams& p, double h) {
  require_undamped(p);
  check_interval(h);
  const DerivedConstants dc = derived_constants_omega(p);
  if (dc.omega * h >= std::numbers::pi) {
    throw Error(ErrorCode::FoldedSampling, "omega*h = " + std::to_string(dc.omega * h) +
                                               " >= pi; choose a smaller sampling interval");
  }
  const double T = p.T();
  return {std::exp(-h / (2.0 * T)), std::exp(-h / T), std::cos(dc.omega * h),
          std::sin(dc.omega * h), dc};
}

}  // namespace

ArxModel zoh_omega(const GeneratorParams& p, double h) {
  const ZohTerms z = zoh_terms(p, h);
  const double R = p.R();
  const double ec = z.e_half * z.c;
  const double es = z.e_half * z.s;
  ArxModel model;
  model.h = h;
  model.method = Method::Zoh;
  model.output = Output::Omega;
  model.den = {-2.0 * ec, z.e_full};
  model.num = {R * (1.0 - ec - z.dc.k * es), R * (z.e_full - ec + z.dc.k * es)};
  return model;
}

ArxModel tustin_omega(const GeneratorParams& p, double h) {
  require_undamped(p);
  check_interval(h);
  const double HR = p.H() * p.R();
  const double T = p.T();
  const double R = p.R();
  const double k = 2.0 / h;
  const double alpha = 2.0 * HR * T * k * k + 2.0 * HR * k + 1.0;
  ArxModel model;
  model.h = h;
  model.method = Method::Tustin;
  model.output = Output::Omega;
  model.den = {(2.0 - 4.0 * HR * T * k * k) / alpha,
               (2.0 * HR * T * k * k - 2.0 * HR * k + 1.0) / alpha};
  model.num = {R * (1.0 + T * k) / alpha, 2.0 * R / alpha, R * (1.0 - T * k) / alpha};
  return model;
}

ArxModel zoh_delta(const GeneratorParams& p, double h) {
  const ZohTerms z = zoh_terms(p, h);
  const double R = p.R();
  const double T = p.T();
  const double HR = p.H() * p.R();
  // The angle-path constants reuse the name alpha in the literature but are
  // not the omega-path alpha.
  const double a = T - 2.0 * HR;
  const double alpha_delta = (3.0 * T - 2.0 * HR) / (2.0 * T);
  const double b = alpha_delta / z.dc.omega;
  const double ec = z.e_half * z.c;
  const double es = z.e_half * z.s;
  ArxModel model;
  model.h = h;
  model.method = Method::Zoh;
  model.output = Output::Delta;
  model.den = {-2.0 * ec - 1.0, z.e_full + 2.0 * ec, -z.e_full};
  model.num = {R * (a - a * ec - b * es + h),
               R * (-a + a * z.e_full - 2.0 * h * ec + 2.0 * b * es),
               R * ((h - a) * z.e_full + a * ec - b * es)};
  return model;
}

ArxModel tustin_delta(const GeneratorParams& p, double h) {
  require_undamped(p);
  check_interval(h);
  const double HR = p.H() * p.R();
  const double T = p.T();
  const double R = p.R();
  const double k = 2.0 / h;
  const double P = HR * T * k * k * k;
  const double Q = HR * k * k;
  const double alpha = 2.0 * P + 2.0 * Q + k;
  ArxModel model;
  model.h = h;
  model.method = Method::Tustin;
  model.output = Output::Delta;
  model.den = {(-6.0 * P - 2.0 * Q + k) / alpha, (6.0 * P - 2.0 * Q - k) / alpha,
               (-2.0 * P + 2.0 * Q - k) / alpha};
  model.num = {R * (1.0 + T * k) / alpha, R * (3.0 + T * k) / alpha, R * (3.0 - T * k) / alpha,
               R * (1.0 - T * k) / alpha};
  return model;
}

ArxModel discretize(const GeneratorParams& p, double h, Method method, Output output) {
  if (output == Output::Omega) {
    return method == Method::Zoh ? zoh_omega(p, h) : tustin_omega(p, h);
  }
  return method == Method::Zoh ? zoh_delta(p, h) : tustin_delta(p, h);
}

std::vector<std::complex<double>> poles(const ArxModel& model) {
  const Eigen::Index n = static_cast<Eigen::Index>(model.den.size());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) companion(0, j) = -model.den[static_cast<std::size_t>(j)];
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::complex<double> evaluate(const ArxModel& model, std::complex<double> z) {
  std::complex<double> num = 0.0;
  for (double c : model.num) num = num * z + c;
  std::complex<double> den = 1.0;
  for (double c : model.den) den = den * z + c;
  return num / den;
}

}  // namespace arxid
