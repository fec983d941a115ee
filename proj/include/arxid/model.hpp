#pragma once

// Linearized single-machine model: governor-turbine lag T with droop R
// feeding a rotor of inertia H. Transfer function from electrical power
// deviation to speed deviation (D = 0):
//
//   dw/dPe = (T s + 1) / (2 H T s^2 + 2 H s + 1/R)
//
// The DC gain is +R. A physical load increase is therefore a negative input
// step if a frequency dip is wanted.

#include <optional>

namespace arxid {

class GeneratorParams {
 public:
  // Throws NonPositiveParameter or NotUnderdamped (2T <= H*R).
  static GeneratorParams create(double H, double R, double T, double D = 0.0);

  double H() const noexcept { return H_; }
  double R() const noexcept { return R_; }
  double T() const noexcept { return T_; }
  double D() const noexcept { return D_; }

  friend bool operator==(const GeneratorParams&, const GeneratorParams&) = default;

 private:
  GeneratorParams(double H, double R, double T, double D) : H_(H), R_(R), T_(T), D_(D) {}

  double H_;
  double R_;
  double T_;
  double D_;
};

// Unchecked record, e.g. from a config file with optional fields.
struct RawParams {
  std::optional<double> H;
  std::optional<double> R;
  std::optional<double> T;
  std::optional<double> D;
};

GeneratorParams validate_params(const RawParams& raw);

// Case-1 constants: alpha = (HR - T)/(2HTR), omega = sqrt((2T - HR)/(4HRT^2)),
// k = alpha/omega. omega is the damped natural frequency of the poles.
struct DerivedConstants {
  double alpha;
  double omega;
  double k;
};

DerivedConstants derived_constants_omega(const GeneratorParams& p);

// Upper-half-plane member of the conjugate pole pair.
struct ComplexPair {
  double re;
  double im;
};

ComplexPair continuous_poles(const GeneratorParams& p);

double dc_gain_omega(const GeneratorParams& p);

// Throws NonZeroDamping: every estimation path assumes D = 0.
void require_undamped(const GeneratorParams& p);

}  // namespace arxid
