#include "arxid/model.hpp"

#include <cmath>
#include <string>

#include "arxid/error.hpp"

namespace arxid {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw Error(ErrorCode::NonPositiveParameter,
                std::string(name) + " must be finite and > 0, got " + std::to_string(value));
  }
}

}  // namespace

GeneratorParams GeneratorParams::create(double H, double R, double T, double D) {
  require_positive(H, "H");
  require_positive(R, "R");
  require_positive(T, "T");
  if (!std::isfinite(D) || D < 0.0) {
    throw Error(ErrorCode::NonPositiveParameter, "D must be finite and >= 0");
  }
  if (!(2.0 * T - H * R > 0.0)) {
    throw Error(ErrorCode::NotUnderdamped,
                "2T = " + std::to_string(2.0 * T) + " <= H*R = " + std::to_string(H * R));
  }
  return GeneratorParams(H, R, T, D);
}

GeneratorParams validate_params(const RawParams& raw) {
  auto need = [](const std::optional<double>& v, const char* name) {
    if (!v) throw Error(ErrorCode::NonPositiveParameter, std::string(name) + " is missing");
    return *v;
  };
  return GeneratorParams::create(need(raw.H, "H"), need(raw.R, "R"), need(raw.T, "T"),
                                 raw.D.value_or(0.0));
}

DerivedConstants derived_constants_omega(const GeneratorParams& p) {
  const double H = p.H(), R = p.R(), T = p.T();
  const double alpha = (H * R - T) / (2.0 * H * T * R);
  const double omega = std::sqrt((2.0 * T - H * R) / (4.0 * H * R * T * T));
  return {alpha, omega, alpha / omega};
}

ComplexPair continuous_poles(const GeneratorParams& p) {
  const double H = p.H(), R = p.R(), T = p.T();
  return {-1.0 / (2.0 * T), std::sqrt(2.0 * H * T / R - H * H) / (2.0 * H * T)};
}

double dc_gain_omega(const GeneratorParams& p) { return p.R(); }

void require_undamped(const GeneratorParams& p) {
  if (p.D() != 0.0) {
    throw Error(ErrorCode::NonZeroDamping,
                "estimation models assume D = 0, got D = " + std::to_string(p.D()));
  }
}

}  // namespace arxid
