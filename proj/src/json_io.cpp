#include "arxid/json_io.hpp"

#include <fstream>

#include "arxid/error.hpp"

namespace arxid {

using nlohmann::json;

json to_json(const ArxModel& m) {
  return {{"h", m.h},
          {"method", to_string(m.method)},
          {"output", to_string(m.output)},
          {"den", m.den},
          {"num", m.num}};
}

ArxModel arx_model_from_json(const json& j) {
  try {
    ArxModel m;
    m.h = j.at("h").get<double>();
    m.method = parse_method(j.at("method").get<std::string>());
    m.output = parse_output(j.at("output").get<std::string>());
    m.den = j.at("den").get<std::vector<double>>();
    m.num = j.at("num").get<std::vector<double>>();
    m.check();
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad ARX model document: ") + e.what());
  }
}

json to_json(const GeneratorParams& p) {
  return {{"H", p.H()}, {"R", p.R()}, {"T", p.T()}, {"D", p.D()}};
}

RawParams raw_params_from_json(const json& j) {
  RawParams raw;
  auto read = [&j](const char* key, std::optional<double>& dst) {
    if (j.contains(key) && !j.at(key).is_null()) dst = j.at(key).get<double>();
  };
  try {
    read("H", raw.H);
    read("R", raw.R);
    read("T", raw.T);
    read("D", raw.D);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad parameter document: ") + e.what());
  }
  return raw;
}

json to_json(const ScenarioConfig& cfg) {
  return {{"step_amplitude", cfg.step_amplitude},
          {"step_time", cfg.step_time},
          {"duration", cfg.duration},
          {"noise_variance", cfg.noise_variance},
          {"output_noise_variance", cfg.output_noise_variance},
          {"rng_seed", cfg.rng_seed},
          {"rng", kRngName}};
}

ScenarioConfig scenario_from_json(const json& j, ScenarioConfig base) {
  try {
    base.step_amplitude = j.value("step_amplitude", base.step_amplitude);
    base.step_time = j.value("step_time", base.step_time);
    base.duration = j.value("duration", base.duration);
    base.noise_variance = j.value("noise_variance", base.noise_variance);
    base.output_noise_variance = j.value("output_noise_variance", base.output_noise_variance);
    base.rng_seed = j.value("rng_seed", base.rng_seed);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad scenario document: ") + e.what());
  }
  return base;
}

json to_json(const ResidualStats& s) { return {{"rms", s.rms}, {"max_abs", s.max_abs}}; }

json to_json(const CoefficientEstimate& e) {
  json coeffs = json::object();
  const auto labels = e.model.labels();
  for (const auto& l : labels) coeffs[l] = e.model.coefficient(l);
  return {{"model", to_json(e.model)},
          {"coefficients", coeffs},
          {"residual", to_json(e.residuals)},
          {"residual_norm", e.residual_norm},
          {"condition_estimate", e.condition_estimate},
          {"rows", e.rows}};
}

json to_json(const EstimationResult& r) {
  return {{"method", to_string(r.method)},
          {"output", to_string(r.output)},
          {"h", r.h},
          {"estimate", to_json(r.coefficients)},
          {"params", to_json(r.params)},
          {"warnings", r.warnings}};
}

json to_json(const FitReport& f) {
  return {{"rmse", f.rmse}, {"nrmse_fit", f.nrmse_fit}, {"max_abs_err", f.max_abs_err}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
}

}  // namespace arxid
