#pragma once

// JSON documents exchanged by the CLI and the Python bindings.
//
//   ArxModel:  {"h": 0.1, "method": "zoh", "output": "omega",
//               "den": [a1, a0], "num": [b1, b0]}    (highest power first)
//   Params:    {"H": 2.5, "R": 0.05, "T": 0.5, "D": 0}

#include <string>

#include "arxid/discretize.hpp"
#include "arxid/model.hpp"
#include "arxid/recover.hpp"
#include "arxid/simulate.hpp"
#include "arxid/validate.hpp"
#include "json.hpp"

namespace arxid {

nlohmann::json to_json(const ArxModel& m);
ArxModel arx_model_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GeneratorParams& p);
RawParams raw_params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ScenarioConfig& cfg);
ScenarioConfig scenario_from_json(const nlohmann::json& j, ScenarioConfig base = {});

nlohmann::json to_json(const ResidualStats& s);
nlohmann::json to_json(const CoefficientEstimate& e);
nlohmann::json to_json(const EstimationResult& r);
nlohmann::json to_json(const FitReport& f);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace arxid
