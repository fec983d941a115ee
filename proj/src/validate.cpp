#include "arxid/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "arxid/csv.hpp"
#include "arxid/error.hpp"

namespace arxid {

TimeSeries playback(const GeneratorParams& p, Method method, const TimeSeries& u, Output output) {
  u.check();
  return simulate_arx(discretize(p, u.h, method, output), u);
}

FitReport fit_metrics(const TimeSeries& measured, const TimeSeries& predicted) {
  if (measured.size() != predicted.size()) {
    throw Error(ErrorCode::LengthMismatch, "measured and predicted lengths differ");
  }
  if (!same_sampling(measured.h, predicted.h)) {
    throw Error(ErrorCode::SamplingMismatch, "measured and predicted sampling intervals differ");
  }
  if (measured.values.empty()) throw Error(ErrorCode::TooFewSamples, "empty series");

  const auto n = static_cast<double>(measured.size());
  const double mean = std::accumulate(measured.values.begin(), measured.values.end(), 0.0) / n;
  double err_sq = 0.0, dev_sq = 0.0, max_abs = 0.0;
  for (std::size_t i = 0; i < measured.size(); ++i) {
    const double e = measured.values[i] - predicted.values[i];
    err_sq += e * e;
    dev_sq += (measured.values[i] - mean) * (measured.values[i] - mean);
    max_abs = std::max(max_abs, std::abs(e));
  }
  FitReport report;
  report.rmse = std::sqrt(err_sq / n);
  report.max_abs_err = max_abs;
  if (dev_sq == 0.0) {
    if (err_sq != 0.0) {
      throw Error(ErrorCode::InvalidArgument, "measured series is constant; fit is undefined");
    }
    report.nrmse_fit = 100.0;
  } else {
    report.nrmse_fit = 100.0 * (1.0 - std::sqrt(err_sq) / std::sqrt(dev_sq));
  }
  return report;
}

void write_overlay_csv(const std::string& path, const TimeSeries& measured,
                       const TimeSeries& predicted) {
  if (measured.size() != predicted.size()) {
    throw Error(ErrorCode::LengthMismatch, "measured and predicted lengths differ");
  }
  std::vector<double> t(measured.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = measured.time_at(i);
  const std::string header[] = {"t", "measured", "predicted"};
  const std::vector<double> columns[] = {t, measured.values, predicted.values};
  write_numeric_csv(path, header, columns);
}

}  // namespace arxid
