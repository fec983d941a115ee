#include "arxid/pmu_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "arxid/csv.hpp"
#include "arxid/error.hpp"
#include "json.hpp"

namespace arxid {

PmuRecording read_pmu_csv(const std::string& path, const PmuSchema& schema, const PmuMeta& meta) {
  const NumericTable table = read_numeric_csv(path);
  PmuRecording rec;
  rec.timestamps = table.column(schema.time);
  rec.freq = table.column(schema.freq);
  rec.power = table.column(schema.power);
  rec.meta = meta;
  for (std::size_t i = 1; i < rec.timestamps.size(); ++i) {
    if (!(rec.timestamps[i] > rec.timestamps[i - 1])) {
      throw Error(ErrorCode::NonMonotoneTime,
                  path + ":" + std::to_string(table.line_numbers[i]) + ": timestamp " +
                      format_double(rec.timestamps[i]) + " does not increase");
    }
  }
  return rec;
}

void write_pmu_csv(const std::string& path, const PmuRecording& rec, const PmuSchema& schema) {
  const std::string header[] = {schema.time, schema.freq, schema.power};
  const std::vector<double> columns[] = {rec.timestamps, rec.freq, rec.power};
  write_numeric_csv(path, header, columns);
}

PmuMeta read_pmu_meta(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedRow, path + ": " + e.what());
  }
  PmuMeta meta;
  meta.f_nom = j.value("f_nom", meta.f_nom);
  meta.s_base = j.value("s_base", meta.s_base);
  meta.prescaled = j.value("prescaled", meta.prescaled);
  meta.source = j.value("source", meta.source);
  return meta;
}

double infer_sampling(const std::vector<double>& timestamps) {
  if (timestamps.size() < 3) {
    throw Error(ErrorCode::TooFewSamples, "need at least 3 timestamps to infer sampling");
  }
  std::vector<double> diffs(timestamps.size() - 1);
  for (std::size_t i = 0; i < diffs.size(); ++i) diffs[i] = timestamps[i + 1] - timestamps[i];
  std::vector<double> sorted = diffs;
  const auto mid = sorted.size() / 2;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(mid), sorted.end());
  double median = sorted[mid];
  if (sorted.size() % 2 == 0) {
    const double lower = *std::max_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(mid));
    median = 0.5 * (median + lower);
  }
  if (!(median > 0.0)) throw Error(ErrorCode::NonMonotoneTime, "timestamps do not increase");
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (std::abs(diffs[i] - median) > kJitterTolerance * median) {
      throw Error(ErrorCode::IrregularSampling,
                  "step " + std::to_string(i) + " is " + format_double(diffs[i]) +
                      " s against median " + format_double(median) + " s");
    }
  }
  return median;
}

PerUnitSignals to_per_unit(const PmuRecording& rec) {
  if (!(rec.meta.f_nom > 0.0) || !(rec.meta.s_base > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "f_nom and s_base must be > 0");
  }
  PerUnitSignals out;
  out.freq_pu.reserve(rec.freq.size());
  for (double f : rec.freq) out.freq_pu.push_back(f / rec.meta.f_nom);
  out.power_pu = rec.power;
  if (!rec.meta.prescaled) {
    for (double& p : out.power_pu) p /= rec.meta.s_base;
  }
  return out;
}

TimeSeries detrend(const TimeSeries& series, std::size_t pre_event_samples) {
  if (pre_event_samples < 10) {
    throw Error(ErrorCode::WindowTooShort, "pre-event window needs at least 10 samples");
  }
  if (pre_event_samples > series.size()) {
    throw Error(ErrorCode::WindowTooShort, "pre-event window longer than the series");
  }
  // Shifted mean: exact for constant segments, less cancellation near f_nom.
  const double ref = series.values.front();
  double shift = 0.0;
  for (std::size_t i = 0; i < pre_event_samples; ++i) shift += series.values[i] - ref;
  const double mean = ref + shift / static_cast<double>(pre_event_samples);
  TimeSeries out = series;
  for (double& v : out.values) v -= mean;
  return out;
}

EventWindow select_event_window(const TimeSeries& u, double threshold, double pre, double post) {
  if (!(threshold > 0.0)) throw Error(ErrorCode::InvalidArgument, "threshold must be > 0");
  if (!(pre >= 0.0) || !(post >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "window extents must be >= 0");
  }
  const auto it = std::find_if(u.values.begin(), u.values.end(),
                               [threshold](double v) { return std::abs(v) > threshold; });
  if (it == u.values.end()) {
    throw Error(ErrorCode::NoEventFound,
                "no sample exceeds the threshold " + format_double(threshold) + " p.u.");
  }
  EventWindow w;
  w.anchor = static_cast<std::size_t>(it - u.values.begin());
  const auto pre_n = static_cast<std::size_t>(std::llround(pre / u.h));
  const auto post_n = static_cast<std::size_t>(std::llround(post / u.h));
  w.start = w.anchor > pre_n ? w.anchor - pre_n : 0;
  w.end = std::min(u.size() - 1, w.anchor + post_n);
  return w;
}

namespace {

TimeSeries slice(const TimeSeries& s, const EventWindow& w) {
  TimeSeries out;
  out.h = s.h;
  out.t0 = s.time_at(w.start);
  out.unit = s.unit;
  out.values.assign(s.values.begin() + static_cast<std::ptrdiff_t>(w.start),
                    s.values.begin() + static_cast<std::ptrdiff_t>(w.end) + 1);
  return out;
}

}  // namespace

PreparedDataset prepare_dataset(const PmuRecording& rec, const IngestOptions& opts) {
  if (rec.freq.size() != rec.timestamps.size() || rec.power.size() != rec.timestamps.size()) {
    throw Error(ErrorCode::LengthMismatch, "recording columns differ in length");
  }
  const double h = infer_sampling(rec.timestamps);
  PerUnitSignals pu = to_per_unit(rec);
  if (opts.negate_power) {
    for (double& p : pu.power_pu) p = -p;
  }

  const TimeSeries freq{h, rec.timestamps.front(), std::move(pu.freq_pu), "p.u."};
  const TimeSeries power{h, rec.timestamps.front(), std::move(pu.power_pu), "p.u."};
  const TimeSeries dw = detrend(freq, opts.pre_event_samples);
  const TimeSeries dp = detrend(power, opts.pre_event_samples);

  PreparedDataset out;
  out.h = h;
  out.window = select_event_window(dp, opts.threshold, opts.pre_seconds, opts.post_seconds);
  out.u = slice(dp, out.window);
  out.y = slice(dw, out.window);
  out.f_pre = (freq.values.front() - dw.values.front()) * rec.meta.f_nom;
  out.p_pre = power.values.front() - dp.values.front();
  return out;
}

}  // namespace arxid
