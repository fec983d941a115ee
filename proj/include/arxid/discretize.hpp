#pragma once

// Exact discrete-time equivalents of the generator model.
//
// Coefficients are stored highest power first. For a model of denominator
// degree n and numerator degree m:
//
//   H(z) = (num[0] z^m + ... + num[m]) / (z^n + den[0] z^(n-1) + ... + den[n-1])
//
// so den = [a_{n-1}, ..., a_0] and num = [b_m, ..., b_0].
//
//   ZOH    / omega : n = 2, m = 1
//   Tustin / omega : n = 2, m = 2
//   ZOH    / delta : n = 3, m = 2
//   Tustin / delta : n = 3, m = 3
//
// The delta (rotor angle) output is the omega output through a unit-gain
// integrator, so every delta model has a pole at z = 1.

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "arxid/model.hpp"

namespace arxid {

enum class Method { Zoh, Tustin };
enum class Output { Omega, Delta };

std::string_view to_string(Method m);
std::string_view to_string(Output o);
Method parse_method(std::string_view s);
Output parse_output(std::string_view s);

struct ModelOrder {
  std::size_t n;  // denominator degree
  std::size_t m;  // numerator degree
};

ModelOrder model_order(Method method, Output output);

struct ArxModel {
  double h = 0.0;
  std::vector<double> den;
  std::vector<double> num;
  Output output = Output::Omega;
  Method method = Method::Zoh;

  std::size_t n() const noexcept { return den.size(); }
  std::size_t m() const noexcept { return num.size() - 1; }

  // "a1","a0","b1","b0" style names in storage order (den then num).
  std::vector<std::string> labels() const;
  double coefficient(std::string_view label) const;

  // Throws InvalidArgument if shape disagrees with (method, output) or any
  // coefficient is non-finite.
  void check() const;
};

ArxModel zoh_omega(const GeneratorParams& p, double h);
ArxModel tustin_omega(const GeneratorParams& p, double h);
ArxModel zoh_delta(const GeneratorParams& p, double h);
ArxModel tustin_delta(const GeneratorParams& p, double h);

ArxModel discretize(const GeneratorParams& p, double h, Method method, Output output);

// Roots of the monic denominator (companion-matrix eigenvalues).
std::vector<std::complex<double>> poles(const ArxModel& model);

std::complex<double> evaluate(const ArxModel& model, std::complex<double> z);

}  // namespace arxid
