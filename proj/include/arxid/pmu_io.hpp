#pragma once

#include <string>
#include <vector>

#include "arxid/simulate.hpp"

namespace arxid {

struct PmuMeta {
  double f_nom = 60.0;   // Hz
  double s_base = 100.0; // MVA
  bool prescaled = false;
  std::string source;
};

struct PmuSchema {
  std::string time = "t";
  std::string freq = "freq_hz";
  std::string power = "p_mw";
};

struct PmuRecording {
  std::vector<double> timestamps;  // s, strictly increasing
  std::vector<double> freq;        // Hz
  std::vector<double> power;       // MW, or p.u. when meta.prescaled
  PmuMeta meta;
};

// Throws MissingColumn, MalformedRow, NonMonotoneTime.
PmuRecording read_pmu_csv(const std::string& path, const PmuSchema& schema = {},
                          const PmuMeta& meta = {});
void write_pmu_csv(const std::string& path, const PmuRecording& rec, const PmuSchema& schema = {});

// Sidecar JSON {"f_nom": 60, "s_base": 100, "prescaled": false, "source": "..."};
// absent keys keep their defaults.
PmuMeta read_pmu_meta(const std::string& path);

// Relative deviation of any step from the median step that is still
// accepted as jitter.
inline constexpr double kJitterTolerance = 0.01;

// Median of successive differences; throws IrregularSampling when any step
// deviates from it by more than kJitterTolerance.
double infer_sampling(const std::vector<double>& timestamps);

struct PerUnitSignals {
  std::vector<double> freq_pu;
  std::vector<double> power_pu;
};

PerUnitSignals to_per_unit(const PmuRecording& rec);

// Subtracts the mean of the first `pre_event_samples` values. Needs >= 10.
TimeSeries detrend(const TimeSeries& series, std::size_t pre_event_samples);

// Inclusive sample range.
struct EventWindow {
  std::size_t start = 0;
  std::size_t anchor = 0;
  std::size_t end = 0;
};

// Anchors on the first sample with |u| > threshold, then extends `pre` and
// `post` seconds around it, clipped to the series. Later disturbances never
// move the anchor. Throws NoEventFound.
EventWindow select_event_window(const TimeSeries& u, double threshold, double pre, double post);

struct IngestOptions {
  std::size_t pre_event_samples = 30;
  double threshold = 0.02;  // p.u.
  double pre_seconds = 2.0;
  double post_seconds = 30.0;
  // Flip the power sign so a load increase becomes a positive input.
  bool negate_power = false;
};

struct PreparedDataset {
  TimeSeries u;  // power deviation, p.u.
  TimeSeries y;  // speed deviation (f - f_pre)/f_nom, p.u.
  double h = 0.0;
  EventWindow window;
  double f_pre = 0.0;  // Hz
  double p_pre = 0.0;  // p.u.
};

PreparedDataset prepare_dataset(const PmuRecording& rec, const IngestOptions& opts = {});

}  // namespace arxid
