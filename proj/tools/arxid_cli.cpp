// arxid command-line front end.
//
// Every subcommand accepts --config FILE (JSON). Values resolve as
// flag > file > default; the resolved set is echoed into each output.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arxid/csv.hpp"
#include "arxid/error.hpp"
#include "arxid/json_io.hpp"
#include "arxid/pmu_io.hpp"
#include "arxid/recover.hpp"
#include "arxid/regression.hpp"
#include "arxid/validate.hpp"

namespace {

using nlohmann::json;

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumerical = 4;

int exit_code(arxid::ErrorClass c) {
  switch (c) {
    case arxid::ErrorClass::Config: return kExitConfig;
    case arxid::ErrorClass::Data: return kExitData;
    case arxid::ErrorClass::Numerical: return kExitNumerical;
  }
  return kExitNumerical;
}

class Resolver {
 public:
  void load(const std::string& path) {
    if (path.empty()) return;
    file_ = arxid::read_json_file(path);
    if (!file_.is_object()) {
      throw arxid::Error(arxid::ErrorCode::InvalidArgument, "config " + path + " is not an object");
    }
    resolved_["config_file"] = path;
  }

  template <typename T>
  T get(const std::string& key, const std::optional<T>& flag, const T& fallback) {
    T value = fallback;
    if (flag) {
      value = *flag;
    } else if (file_.contains(key)) {
      try {
        value = file_.at(key).get<T>();
      } catch (const json::exception& e) {
        throw arxid::Error(arxid::ErrorCode::InvalidArgument,
                           "config key '" + key + "': " + e.what());
      }
    }
    resolved_[key] = value;
    return value;
  }

  // Like get() but without a default; unresolved keys stay absent.
  std::optional<double> find(const std::string& key, const std::optional<double>& flag,
                             const std::optional<double>& fallback) {
    std::optional<double> value = fallback;
    if (flag || file_.contains(key)) value = get(key, flag, 0.0);
    if (value) resolved_[key] = *value;
    return value;
  }

  const json& resolved() const { return resolved_; }

 private:
  json file_ = json::object();
  json resolved_ = json::object();
};

struct Context {
  std::string command;
  Resolver cfg;

  json meta() const {
    return {{"tool", "arxid"}, {"version", ARXID_VERSION}, {"command", command},
            {"config", cfg.resolved()}};
  }

  std::vector<std::string> comments() const {
    return {std::string("arxid ") + ARXID_VERSION + " " + command,
            "config " + cfg.resolved().dump()};
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string fmt(double v, int prec = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", prec, v);
  return buf;
}

// ---------------------------------------------------------------- simulate

struct SimulateFlags {
  std::string config;
  std::optional<double> H, R, T, D, h, step, step_time, duration, noise_var, out_noise_var;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> method, output, out, scenario_out;
};

int run_simulate(const SimulateFlags& f) {
  Context ctx{"simulate", {}};
  ctx.cfg.load(f.config);
  arxid::RawParams raw;
  raw.H = ctx.cfg.get("H", f.H, 2.5);
  raw.R = ctx.cfg.get("R", f.R, 0.05);
  raw.T = ctx.cfg.get("T", f.T, 0.5);
  raw.D = ctx.cfg.get("D", f.D, 0.0);
  const double h = ctx.cfg.get("h", f.h, 0.1);
  const auto method = arxid::parse_method(ctx.cfg.get<std::string>("method", f.method, "zoh"));
  const auto output = arxid::parse_output(ctx.cfg.get<std::string>("output", f.output, "omega"));
  arxid::ScenarioConfig sc;
  sc.step_amplitude = ctx.cfg.get("step", f.step, sc.step_amplitude);
  sc.step_time = ctx.cfg.get("step_time", f.step_time, sc.step_time);
  sc.duration = ctx.cfg.get("duration", f.duration, sc.duration);
  sc.noise_variance = ctx.cfg.get("noise_var", f.noise_var, sc.noise_variance);
  sc.output_noise_variance = ctx.cfg.get("output_noise_var", f.out_noise_var, 0.0);
  sc.rng_seed = ctx.cfg.get<std::uint64_t>("seed", f.seed, sc.rng_seed);
  const std::string out = ctx.cfg.get<std::string>("out", f.out, "dataset.csv");
  const std::string scenario_out =
      ctx.cfg.get<std::string>("scenario_out", f.scenario_out, out + ".json");
  sc.check();
  const auto p = arxid::validate_params(raw);

  const arxid::Dataset d = arxid::generate_dataset(p, h, method, output, sc);
  arxid::write_dataset_csv(out, d, ctx.comments());
  json scenario = {{"meta", ctx.meta()},       {"params", arxid::to_json(p)},
                   {"h", h},                   {"method", arxid::to_string(method)},
                   {"output", arxid::to_string(output)}, {"scenario", arxid::to_json(sc)},
                   {"samples", d.y.size()}};
  arxid::write_json_file(scenario_out, scenario);
  std::cout << "wrote " << d.y.size() << " samples to " << out << " (scenario " << scenario_out
            << ")\n";
  return 0;
}

// ---------------------------------------------------------------- estimate

struct EstimateFlags {
  std::string config;
  std::optional<std::string> data, method, output, out, dump_regression;
};

void print_coefficients(const arxid::CoefficientEstimate& c) {
  std::cout << "Estimated coefficients (" << arxid::to_string(c.model.method) << ", "
            << arxid::to_string(c.model.output) << ", h = " << fmt(c.model.h) << ")\n";
  for (const auto& label : c.model.labels()) {
    std::printf("  %-4s %16s\n", label.c_str(), fmt(c.model.coefficient(label)).c_str());
  }
  std::printf("  rows %zu  residual rms %s  cond %s\n", c.rows, fmt(c.residuals.rms, 4).c_str(),
              fmt(c.condition_estimate, 3).c_str());
}

int run_estimate(const EstimateFlags& f) {
  Context ctx{"estimate", {}};
  ctx.cfg.load(f.config);
  const std::string data = ctx.cfg.get<std::string>("data", f.data, "");
  const auto method = arxid::parse_method(ctx.cfg.get<std::string>("method", f.method, "zoh"));
  const auto output = arxid::parse_output(ctx.cfg.get<std::string>("output", f.output, "omega"));
  const std::string out = ctx.cfg.get<std::string>("out", f.out, "");
  const std::string dump = ctx.cfg.get<std::string>("dump_regression", f.dump_regression, "");
  if (data.empty()) throw arxid::Error(arxid::ErrorCode::InvalidArgument, "--data is required");

  const arxid::Dataset d = arxid::read_dataset_csv(data);
  if (!dump.empty()) {
    const auto order = arxid::model_order(method, output);
    arxid::write_regression_csv(arxid::build_regression(d.y, d.u, order.n, order.m), dump);
  }
  const auto coef = arxid::estimate_coefficients(d.u, d.y, method, output);
  print_coefficients(coef);

  try {
    const arxid::EstimationResult r = arxid::estimate(d.u, d.y, method, output);
    std::cout << "Recovered parameters\n";
    std::printf("  T %12s\n  R %12s\n  H %12s\n", fmt(r.params.T(), 6).c_str(),
                fmt(r.params.R(), 6).c_str(), fmt(r.params.H(), 6).c_str());
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    if (!out.empty()) {
      json j = arxid::to_json(r);
      j["meta"] = ctx.meta();
      arxid::write_json_file(out, j);
    }
  } catch (const arxid::Error& e) {
    if (!out.empty()) {
      json j = {{"meta", ctx.meta()},
                {"estimate", arxid::to_json(coef)},
                {"error", {{"code", arxid::to_string(e.code())}, {"message", e.what()}}}};
      arxid::write_json_file(out, j);
    }
    throw;
  }
  return 0;
}

// ---------------------------------------------------------------- validate

struct ValidateFlags {
  std::string config;
  std::optional<std::string> data, params, method, overlay, out;
  std::optional<double> H, R, T;
};

arxid::RawParams params_document(const std::string& path) {
  const json j = arxid::read_json_file(path);
  return arxid::raw_params_from_json(j.contains("params") ? j.at("params") : j);
}

int run_validate(const ValidateFlags& f) {
  Context ctx{"validate", {}};
  ctx.cfg.load(f.config);
  const std::string data = ctx.cfg.get<std::string>("data", f.data, "");
  const std::string params_path = ctx.cfg.get<std::string>("params", f.params, "");
  const auto method = arxid::parse_method(ctx.cfg.get<std::string>("method", f.method, "zoh"));
  const std::string overlay = ctx.cfg.get<std::string>("overlay", f.overlay, "");
  const std::string out = ctx.cfg.get<std::string>("out", f.out, "");
  if (data.empty()) throw arxid::Error(arxid::ErrorCode::InvalidArgument, "--data is required");

  arxid::RawParams raw = params_path.empty() ? arxid::RawParams{} : params_document(params_path);
  raw.H = ctx.cfg.find("H", f.H, raw.H);
  raw.R = ctx.cfg.find("R", f.R, raw.R);
  raw.T = ctx.cfg.find("T", f.T, raw.T);
  const auto p = arxid::validate_params(raw);

  const arxid::Dataset d = arxid::read_dataset_csv(data);
  const arxid::TimeSeries predicted = arxid::playback(p, method, d.u);
  const arxid::FitReport r = arxid::fit_metrics(d.y, predicted);
  std::printf("fit %.4f %%  rmse %s  max_abs_err %s\n", r.nrmse_fit, fmt(r.rmse, 6).c_str(),
              fmt(r.max_abs_err, 6).c_str());
  if (!overlay.empty()) {
    const auto t = [&] {
      std::vector<double> v(d.y.size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = d.y.time_at(i);
      return v;
    }();
    const std::vector<std::string> header = {"t", "measured", "predicted"};
    const std::vector<std::vector<double>> cols = {t, d.y.values, predicted.values};
    arxid::write_numeric_csv(overlay, header, cols, ctx.comments());
  }
  if (!out.empty()) {
    json j = {{"meta", ctx.meta()}, {"params", arxid::to_json(p)}, {"fit", arxid::to_json(r)}};
    arxid::write_json_file(out, j);
  }
  return 0;
}

// ---------------------------------------------------------------- roundtrip

struct RoundtripFlags {
  std::string config;
  std::optional<std::string> methods, outputs, hs, out;
  std::optional<double> H, R, T, tol, noise_var;
  std::optional<std::uint64_t> seed;
  bool simulate = false;
};

int run_roundtrip(const RoundtripFlags& f) {
  Context ctx{"roundtrip", {}};
  ctx.cfg.load(f.config);
  const auto methods = split_list(ctx.cfg.get<std::string>("methods", f.methods, "zoh,tustin"));
  const auto outputs = split_list(ctx.cfg.get<std::string>("outputs", f.outputs, "omega,delta"));
  std::vector<double> hs;
  for (const auto& s : split_list(ctx.cfg.get<std::string>("hs", f.hs, "0.1,0.01,0.001"))) {
    try {
      hs.push_back(std::stod(s));
    } catch (const std::exception&) {
      throw arxid::Error(arxid::ErrorCode::InvalidArgument, "bad sampling period '" + s + "'");
    }
  }
  arxid::RawParams raw;
  raw.H = ctx.cfg.get("H", f.H, 2.5);
  raw.R = ctx.cfg.get("R", f.R, 0.05);
  raw.T = ctx.cfg.get("T", f.T, 0.5);
  const bool simulate =
      ctx.cfg.get<bool>("simulate", f.simulate ? std::optional<bool>(true) : std::nullopt, false);
  const double tol = ctx.cfg.get("tol", f.tol, 1e-8);
  arxid::ScenarioConfig sc;
  sc.noise_variance = ctx.cfg.get("noise_var", f.noise_var, sc.noise_variance);
  sc.rng_seed = ctx.cfg.get<std::uint64_t>("seed", f.seed, sc.rng_seed);
  const std::string out = ctx.cfg.get<std::string>("out", f.out, "");
  const auto p = arxid::validate_params(raw);
  std::vector<arxid::Method> ms;
  std::vector<arxid::Output> os;
  for (const auto& s : methods) ms.push_back(arxid::parse_method(s));
  for (const auto& s : outputs) os.push_back(arxid::parse_output(s));
  sc.check();

  // Simulated cells use absolute tolerances on (T, R, H).
  const double abs_tol[3] = {0.005, 0.0005, 0.01};
  int failures = 0;
  json cells = json::array();
  std::printf("%-7s %-6s %-8s %-16s %s\n", "method", "output", "h", "status", "max_err");
  for (auto m : ms) {
    for (auto o : os) {
      for (double h : hs) {
        std::string status = "PASS";
        double err = 0.0;
        try {
          arxid::GeneratorParams q = p;
          if (simulate) {
            const auto d = arxid::generate_dataset(p, h, m, o, sc);
            q = arxid::estimate(d.u, d.y, m, o).params;
            const double e[3] = {std::abs(q.T() - p.T()), std::abs(q.R() - p.R()),
                                 std::abs(q.H() - p.H())};
            for (int i = 0; i < 3; ++i) {
              err = std::max(err, e[i]);
              if (e[i] > abs_tol[i]) status = "FAIL";
            }
          } else {
            q = arxid::recover(arxid::discretize(p, h, m, o));
            err = std::max({std::abs(q.T() / p.T() - 1.0), std::abs(q.R() / p.R() - 1.0),
                            std::abs(q.H() / p.H() - 1.0)});
            if (err > tol) status = "FAIL";
          }
        } catch (const arxid::Error& e) {
          status = arxid::to_string(e.code());
          err = std::nan("");
        }
        const bool folded = status == arxid::to_string(arxid::ErrorCode::FoldedSampling);
        if (status != "PASS" && !folded) ++failures;
        std::printf("%-7s %-6s %-8s %-16s %s\n", std::string(arxid::to_string(m)).c_str(),
                    std::string(arxid::to_string(o)).c_str(), fmt(h, 6).c_str(), status.c_str(),
                    fmt(err, 3).c_str());
        cells.push_back({{"method", arxid::to_string(m)},
                         {"output", arxid::to_string(o)},
                         {"h", h},
                         {"status", status},
                         {"max_err", std::isnan(err) ? json(nullptr) : json(err)}});
      }
    }
  }
  std::printf("%zu cells, %d failed\n", cells.size(), failures);
  if (!out.empty()) {
    arxid::write_json_file(out, {{"meta", ctx.meta()}, {"cells", cells}, {"failures", failures}});
  }
  return failures == 0 ? 0 : kExitNumerical;
}

// ---------------------------------------------------------------- ingest

struct IngestFlags {
  std::string config;
  std::optional<std::string> pmu, meta, col_t, col_freq, col_power, out;
  std::optional<double> f_nom, s_base, threshold, pre, post;
  std::optional<std::size_t> pre_event_samples;
  bool prescaled = false;
  bool negate_power = false;
};

int run_ingest(const IngestFlags& f) {
  Context ctx{"ingest", {}};
  ctx.cfg.load(f.config);
  const std::string pmu = ctx.cfg.get<std::string>("pmu", f.pmu, "");
  const std::string meta_path = ctx.cfg.get<std::string>("meta", f.meta, "");
  if (pmu.empty()) throw arxid::Error(arxid::ErrorCode::InvalidArgument, "--pmu is required");
  arxid::PmuSchema schema;
  schema.time = ctx.cfg.get("col_t", f.col_t, schema.time);
  schema.freq = ctx.cfg.get("col_freq", f.col_freq, schema.freq);
  schema.power = ctx.cfg.get("col_power", f.col_power, schema.power);
  arxid::PmuMeta meta = meta_path.empty() ? arxid::PmuMeta{} : arxid::read_pmu_meta(meta_path);
  meta.f_nom = ctx.cfg.get("f_nom", f.f_nom, meta.f_nom);
  meta.s_base = ctx.cfg.get("s_base", f.s_base, meta.s_base);
  meta.prescaled = ctx.cfg.get<bool>(
      "prescaled", f.prescaled ? std::optional<bool>(true) : std::nullopt, meta.prescaled);
  arxid::IngestOptions opts;
  opts.pre_event_samples =
      ctx.cfg.get("pre_event_samples", f.pre_event_samples, opts.pre_event_samples);
  opts.threshold = ctx.cfg.get("threshold", f.threshold, opts.threshold);
  opts.pre_seconds = ctx.cfg.get("pre", f.pre, opts.pre_seconds);
  opts.post_seconds = ctx.cfg.get("post", f.post, opts.post_seconds);
  opts.negate_power = ctx.cfg.get<bool>(
      "negate_power", f.negate_power ? std::optional<bool>(true) : std::nullopt, false);
  const std::string out = ctx.cfg.get<std::string>("out", f.out, "ingested.csv");
  if (!(meta.f_nom > 0.0) || !(meta.s_base > 0.0)) {
    throw arxid::Error(arxid::ErrorCode::InvalidArgument, "f_nom and s_base must be positive");
  }
  if (!(opts.threshold > 0.0)) {
    throw arxid::Error(arxid::ErrorCode::InvalidArgument, "threshold must be positive");
  }

  const arxid::PmuRecording rec = arxid::read_pmu_csv(pmu, schema, meta);
  const arxid::PreparedDataset prep = arxid::prepare_dataset(rec, opts);
  auto comments = ctx.comments();
  comments.push_back("normalization y = (f - f_pre)/f_nom, u = P/s_base - p_pre");
  comments.push_back("f_pre " + arxid::format_double(prep.f_pre) + " Hz, p_pre " +
                     arxid::format_double(prep.p_pre) + " p.u., h " +
                     arxid::format_double(prep.h) + " s");
  comments.push_back("window samples " + std::to_string(prep.window.start) + ".." +
                     std::to_string(prep.window.end) + ", anchor " +
                     std::to_string(prep.window.anchor));
  arxid::write_dataset_csv(out, arxid::Dataset{prep.u, prep.y}, comments);
  std::cout << "wrote " << prep.y.size() << " samples to " << out << " (h " << fmt(prep.h, 6)
            << " s, anchor t " << fmt(rec.timestamps[prep.window.anchor], 6) << " s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generator parameter identification from ARX models"};
  app.set_version_flag("--version", std::string(ARXID_VERSION));
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  SimulateFlags sim;
  auto* s = app.add_subcommand("simulate", "Generate a benchmark step-response dataset");
  s->add_option("--config", sim.config, "JSON config file");
  s->add_option("--H", sim.H, "Inertia constant [s]");
  s->add_option("--R", sim.R, "Droop [p.u.]");
  s->add_option("--T", sim.T, "Governor time constant [s]");
  s->add_option("--D", sim.D, "Damping (must be 0)");
  s->add_option("--h", sim.h, "Sampling period [s]");
  s->add_option("--method", sim.method, "Data-generation model: zoh|tustin");
  s->add_option("--output", sim.output, "omega|delta");
  s->add_option("--step", sim.step, "Step amplitude [p.u.]");
  s->add_option("--step-time", sim.step_time, "Step time [s]");
  s->add_option("--duration", sim.duration, "Duration [s]");
  s->add_option("--noise-var", sim.noise_var, "Input noise variance");
  s->add_option("--output-noise-var", sim.out_noise_var, "Output measurement noise variance");
  s->add_option("--seed", sim.seed, "RNG seed");
  s->add_option("--out", sim.out, "Dataset CSV path");
  s->add_option("--scenario-out", sim.scenario_out, "Scenario JSON path");

  EstimateFlags est;
  auto* e = app.add_subcommand("estimate", "Estimate ARX coefficients and recover H, R, T");
  e->add_option("--config", est.config, "JSON config file");
  e->add_option("--data", est.data, "Dataset CSV (t,u,y)");
  e->add_option("--method", est.method, "Assumed ARX structure: zoh|tustin");
  e->add_option("--output", est.output, "omega|delta");
  e->add_option("--out", est.out, "Result JSON path");
  e->add_option("--dump-regression", est.dump_regression, "Write the regression matrix CSV");

  ValidateFlags val;
  auto* v = app.add_subcommand("validate", "Play back parameters against a dataset");
  v->add_option("--config", val.config, "JSON config file");
  v->add_option("--data", val.data, "Dataset CSV (t,u,y)");
  v->add_option("--params", val.params, "Params or estimate-result JSON");
  v->add_option("--H", val.H, "Inertia constant [s]");
  v->add_option("--R", val.R, "Droop [p.u.]");
  v->add_option("--T", val.T, "Governor time constant [s]");
  v->add_option("--method", val.method, "Playback discretization: zoh|tustin");
  v->add_option("--overlay", val.overlay, "Overlay CSV path (t,measured,predicted)");
  v->add_option("--out", val.out, "Fit report JSON path");

  RoundtripFlags rt;
  auto* r = app.add_subcommand("roundtrip", "Discretize/recover grid check");
  r->add_option("--config", rt.config, "JSON config file");
  r->add_option("--methods", rt.methods, "Comma-separated methods");
  r->add_option("--outputs", rt.outputs, "Comma-separated outputs");
  r->add_option("--hs", rt.hs, "Comma-separated sampling periods");
  r->add_option("--H", rt.H, "Inertia constant [s]");
  r->add_option("--R", rt.R, "Droop [p.u.]");
  r->add_option("--T", rt.T, "Governor time constant [s]");
  r->add_option("--tol", rt.tol, "Relative tolerance for algebraic cells");
  r->add_flag("--simulate", rt.simulate, "Go through simulated noisy data and estimation");
  r->add_option("--noise-var", rt.noise_var, "Input noise variance (with --simulate)");
  r->add_option("--seed", rt.seed, "RNG seed (with --simulate)");
  r->add_option("--out", rt.out, "Report JSON path");

  IngestFlags ing;
  auto* g = app.add_subcommand("ingest", "Convert a PMU CSV into a t,u,y dataset");
  g->add_option("--config", ing.config, "JSON config file");
  g->add_option("--pmu", ing.pmu, "PMU CSV path");
  g->add_option("--meta", ing.meta, "Metadata sidecar JSON");
  g->add_option("--col-t", ing.col_t, "Time column");
  g->add_option("--col-freq", ing.col_freq, "Frequency column [Hz]");
  g->add_option("--col-power", ing.col_power, "Power column [MW]");
  g->add_option("--f-nom", ing.f_nom, "Nominal frequency [Hz]");
  g->add_option("--s-base", ing.s_base, "Power base [MVA]");
  g->add_flag("--prescaled", ing.prescaled, "Power column is already in p.u.");
  g->add_option("--pre-event-samples", ing.pre_event_samples, "Samples used for detrending");
  g->add_option("--threshold", ing.threshold, "Event threshold on |u| [p.u.]");
  g->add_option("--pre", ing.pre, "Seconds kept before the event");
  g->add_option("--post", ing.post, "Seconds kept after the event");
  g->add_flag("--negate-power", ing.negate_power, "Flip the power sign");
  g->add_option("--out", ing.out, "Dataset CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForVersion& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitConfig;
  }

  try {
    if (s->parsed()) return run_simulate(sim);
    if (e->parsed()) return run_estimate(est);
    if (v->parsed()) return run_validate(val);
    if (r->parsed()) return run_roundtrip(rt);
    if (g->parsed()) return run_ingest(ing);
  } catch (const arxid::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return exit_code(arxid::classify(ex.code()));
  } catch (const nlohmann::json::exception& ex) {
    std::cerr << "error: InvalidArgument: " << ex.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
