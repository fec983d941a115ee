#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arxid/csv.hpp"
#include "arxid/error.hpp"
#include "arxid/json_io.hpp"
#include "arxid/pmu_io.hpp"
#include "arxid/recover.hpp"
#include "arxid/validate.hpp"

namespace py = pybind11;
using namespace arxid;

namespace {

TimeSeries series(const std::vector<double>& values, double h, double t0) {
  TimeSeries s{h, t0, values, ""};
  s.check();
  return s;
}

}  // namespace

PYBIND11_MODULE(_arxid, m) {
  m.doc() = "Generator parameter identification from ARX models";
  m.attr("__version__") = ARXID_VERSION;
  m.attr("RNG_NAME") = kRngName;

  // The module keeps the class alive.
  static PyObject* arxid_error =
      py::exception<Error>(m, "ArxidError", PyExc_RuntimeError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(arxid_error)(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(arxid_error, inst.ptr());
    }
  });

  py::enum_<Method>(m, "Method").value("ZOH", Method::Zoh).value("TUSTIN", Method::Tustin);
  py::enum_<Output>(m, "Output").value("OMEGA", Output::Omega).value("DELTA", Output::Delta);

  py::class_<GeneratorParams>(m, "GeneratorParams")
      .def(py::init(&GeneratorParams::create), py::arg("H"), py::arg("R"), py::arg("T"),
           py::arg("D") = 0.0)
      .def_property_readonly("H", &GeneratorParams::H)
      .def_property_readonly("R", &GeneratorParams::R)
      .def_property_readonly("T", &GeneratorParams::T)
      .def_property_readonly("D", &GeneratorParams::D)
      .def("__eq__", [](const GeneratorParams& a, const GeneratorParams& b) { return a == b; })
      .def("__repr__", [](const GeneratorParams& p) {
        return "GeneratorParams(H=" + format_double(p.H()) + ", R=" + format_double(p.R()) +
               ", T=" + format_double(p.T()) + ")";
      });

  py::class_<ArxModel>(m, "ArxModel")
      .def_readonly("h", &ArxModel::h)
      .def_readonly("den", &ArxModel::den)
      .def_readonly("num", &ArxModel::num)
      .def_readonly("method", &ArxModel::method)
      .def_readonly("output", &ArxModel::output)
      .def_property_readonly("n", &ArxModel::n)
      .def_property_readonly("m", &ArxModel::m)
      .def("labels", &ArxModel::labels)
      .def("coefficient", &ArxModel::coefficient)
      .def("poles", [](const ArxModel& a) { return poles(a); })
      .def("to_json", [](const ArxModel& a) { return to_json(a).dump(); })
      .def_static("from_json",
                  [](const std::string& s) { return arx_model_from_json(nlohmann::json::parse(s)); });

  py::class_<TimeSeries>(m, "TimeSeries")
      .def(py::init(&series), py::arg("values"), py::arg("h"), py::arg("t0") = 0.0)
      .def_readonly("h", &TimeSeries::h)
      .def_readonly("t0", &TimeSeries::t0)
      .def_readonly("values", &TimeSeries::values)
      .def("times",
           [](const TimeSeries& s) {
             std::vector<double> t(s.size());
             for (std::size_t i = 0; i < t.size(); ++i) t[i] = s.time_at(i);
             return t;
           })
      .def("__len__", &TimeSeries::size);

  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("step_amplitude", &ScenarioConfig::step_amplitude)
      .def_readwrite("step_time", &ScenarioConfig::step_time)
      .def_readwrite("duration", &ScenarioConfig::duration)
      .def_readwrite("noise_variance", &ScenarioConfig::noise_variance)
      .def_readwrite("rng_seed", &ScenarioConfig::rng_seed)
      .def_readwrite("output_noise_variance", &ScenarioConfig::output_noise_variance);

  py::class_<Dataset>(m, "Dataset").def_readonly("u", &Dataset::u).def_readonly("y", &Dataset::y);

  py::class_<ResidualStats>(m, "ResidualStats")
      .def_readonly("rms", &ResidualStats::rms)
      .def_readonly("max_abs", &ResidualStats::max_abs);

  py::class_<CoefficientEstimate>(m, "CoefficientEstimate")
      .def_readonly("model", &CoefficientEstimate::model)
      .def_readonly("residuals", &CoefficientEstimate::residuals)
      .def_readonly("residual_norm", &CoefficientEstimate::residual_norm)
      .def_readonly("condition_estimate", &CoefficientEstimate::condition_estimate)
      .def_readonly("rows", &CoefficientEstimate::rows);

  py::class_<EstimationResult>(m, "EstimationResult")
      .def_readonly("method", &EstimationResult::method)
      .def_readonly("output", &EstimationResult::output)
      .def_readonly("h", &EstimationResult::h)
      .def_readonly("coefficients", &EstimationResult::coefficients)
      .def_readonly("params", &EstimationResult::params)
      .def_readonly("warnings", &EstimationResult::warnings)
      .def("to_json", [](const EstimationResult& r) { return to_json(r).dump(); });

  py::class_<FitReport>(m, "FitReport")
      .def_readonly("rmse", &FitReport::rmse)
      .def_readonly("nrmse_fit", &FitReport::nrmse_fit)
      .def_readonly("max_abs_err", &FitReport::max_abs_err);

  py::class_<IngestOptions>(m, "IngestOptions")
      .def(py::init<>())
      .def_readwrite("pre_event_samples", &IngestOptions::pre_event_samples)
      .def_readwrite("threshold", &IngestOptions::threshold)
      .def_readwrite("pre_seconds", &IngestOptions::pre_seconds)
      .def_readwrite("post_seconds", &IngestOptions::post_seconds)
      .def_readwrite("negate_power", &IngestOptions::negate_power);

  py::class_<PreparedDataset>(m, "PreparedDataset")
      .def_readonly("u", &PreparedDataset::u)
      .def_readonly("y", &PreparedDataset::y)
      .def_readonly("h", &PreparedDataset::h)
      .def_readonly("f_pre", &PreparedDataset::f_pre)
      .def_readonly("p_pre", &PreparedDataset::p_pre)
      .def_property_readonly("window", [](const PreparedDataset& d) {
        return py::make_tuple(d.window.start, d.window.anchor, d.window.end);
      });

  m.def("zoh_omega", &zoh_omega, py::arg("params"), py::arg("h"));
  m.def("tustin_omega", &tustin_omega, py::arg("params"), py::arg("h"));
  m.def("zoh_delta", &zoh_delta, py::arg("params"), py::arg("h"));
  m.def("tustin_delta", &tustin_delta, py::arg("params"), py::arg("h"));
  m.def("discretize", &discretize, py::arg("params"), py::arg("h"), py::arg("method"),
        py::arg("output") = Output::Omega);
  m.def("recover", &recover, py::arg("model"));

  m.def("simulate_arx", &simulate_arx, py::arg("model"), py::arg("u"));
  m.def("analytic_step_response_omega", &analytic_step_response_omega, py::arg("params"),
        py::arg("amplitude"), py::arg("h"), py::arg("n"));
  m.def("generate_dataset", &generate_dataset, py::arg("params"), py::arg("h"),
        py::arg("method"), py::arg("output") = Output::Omega,
        py::arg("config") = ScenarioConfig{});

  m.def("estimate_coefficients", &estimate_coefficients, py::arg("u"), py::arg("y"),
        py::arg("method"), py::arg("output") = Output::Omega);
  m.def("estimate", &estimate, py::arg("u"), py::arg("y"), py::arg("method"),
        py::arg("output") = Output::Omega);

  m.def("playback", &playback, py::arg("params"), py::arg("method"), py::arg("u"),
        py::arg("output") = Output::Omega);
  m.def("fit_metrics", &fit_metrics, py::arg("measured"), py::arg("predicted"));

  m.def("read_dataset_csv", &read_dataset_csv, py::arg("path"));
  m.def(
      "write_dataset_csv",
      [](const std::string& path, const Dataset& d) { write_dataset_csv(path, d); },
      py::arg("path"), py::arg("dataset"));
  m.def(
      "ingest_pmu",
      [](const std::string& path, std::optional<std::string> meta, const IngestOptions& opts) {
        const PmuMeta pm = meta ? read_pmu_meta(*meta) : PmuMeta{};
        return prepare_dataset(read_pmu_csv(path, {}, pm), opts);
      },
      py::arg("path"), py::arg("meta") = std::nullopt, py::arg("options") = IngestOptions{});
}
