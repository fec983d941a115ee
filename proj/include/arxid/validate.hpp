#pragma once

#include <string>

#include "arxid/discretize.hpp"
#include "arxid/model.hpp"
#include "arxid/simulate.hpp"

namespace arxid {

// Drives the discretized model with a recorded input from rest.
TimeSeries playback(const GeneratorParams& p, Method method, const TimeSeries& u,
                    Output output = Output::Omega);

struct FitReport {
  double rmse = 0.0;
  double nrmse_fit = 0.0;  // percent, 100 (1 - |y - yhat| / |y - mean(y)|)
  double max_abs_err = 0.0;
};

// Throws LengthMismatch or SamplingMismatch. A constant measured series has
// no defined fit unless the prediction matches it exactly.
FitReport fit_metrics(const TimeSeries& measured, const TimeSeries& predicted);

// Columns t,measured,predicted.
void write_overlay_csv(const std::string& path, const TimeSeries& measured,
                       const TimeSeries& predicted);

}  // namespace arxid
