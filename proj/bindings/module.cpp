// Python bindings for the ccorder library. The surface mirrors the C++ API:
// canonical-correlation spectra, the max-min and baseline detectors, the
// chi-square helpers, synthetic data generation, and the Monte Carlo harness.
// Configuration objects cross the boundary as JSON (text or dict), reusing
// the same strict parser as the CLI.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "ccorder/cca.hpp"
#include "ccorder/config.hpp"
#include "ccorder/datagen.hpp"
#include "ccorder/detectors.hpp"
#include "ccorder/errors.hpp"
#include "ccorder/harness.hpp"
#include "ccorder/stats.hpp"

namespace py = pybind11;
using namespace ccorder;

namespace {

/// Accept configuration as either JSON text or any Python object that the
/// json module can serialize (dict, list, ...).
nlohmann::json to_json(const py::object& obj) {
    std::string text;
    if (py::isinstance<py::str>(obj)) {
        text = obj.cast<std::string>();
    } else {
        text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ArgumentError(std::string("config: invalid JSON (") + e.what() + ")");
    }
}

/// File-shaped payloads carry {"schema": 1, ...}; enforce the version when
/// the key is present so dicts loaded from config files behave like files.
void check_schema_if_present(const nlohmann::json& j) {
    if (j.is_object() && j.contains("schema") && j.at("schema") != kSchemaVersion) {
        throw ArgumentError("config: unsupported schema version " +
                            j.at("schema").dump() + " (this build reads schema " +
                            std::to_string(kSchemaVersion) + ")");
    }
}

ScenarioConfig scenario_from_object(const py::object& obj) {
    nlohmann::json j = to_json(obj);
    check_schema_if_present(j);
    if (j.is_object() && j.contains("scenario")) {
        return scenario_from_json(j.at("scenario"));
    }
    return scenario_from_json(j);
}

ExperimentSpec experiment_from_object(const py::object& obj) {
    nlohmann::json j = to_json(obj);
    check_schema_if_present(j);
    return experiment_from_json(j);
}

DetectorConfig make_detector(const std::string& method, std::optional<double> p_fa,
                             int r_max) {
    nlohmann::json j;
    j["method"] = method;
    if (p_fa.has_value()) j["p_fa"] = *p_fa;
    if (r_max != 0) j["r_max"] = r_max;
    return detector_from_json(j);
}

DataMatrixPair make_pair(CMatrix X, CMatrix Y) {
    DataMatrixPair pair{std::move(X), std::move(Y)};
    pair.validate();
    return pair;
}

py::dict decision_to_dict(const DetectorDecision& dec) {
    py::list diags;
    for (const auto& d : dec.diagnostics) {
        py::dict entry;
        entry["r_x"] = d.r_x;
        entry["r_y"] = d.r_y;
        entry["min_step"] = d.min_step;
        entry["skipped"] = d.skipped;
        entry["skip_reason"] = d.skip_reason;
        entry["statistics"] = d.statistics;
        entry["thresholds"] = d.thresholds;
        diags.append(std::move(entry));
    }
    py::dict out;
    out["d_hat"] = dec.d_hat;
    out["r_x_star"] = dec.r_x_star;
    out["r_y_star"] = dec.r_y_star;
    out["diagnostics"] = std::move(diags);
    return out;
}

} // namespace

PYBIND11_MODULE(_ccorder, m) {
    m.doc() = "Joint order and correlation-count estimation for two-channel "
              "data with small sample support";

    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<ComputationError>(m, "ComputationError", PyExc_RuntimeError);

    py::class_<CanonicalSpectrum>(m, "CanonicalSpectrum",
        "Sample canonical correlations of one PCA rank pair: min(r_x, r_y) "
        "values sorted descending in [0, 1].")
        .def(py::init([](int r_x, int r_y, const std::vector<double>& k) {
                 CanonicalSpectrum spec;
                 spec.r_x = r_x;
                 spec.r_y = r_y;
                 if (r_x < 1 || r_y < 1) {
                     throw ArgumentError("spectrum: ranks must be positive");
                 }
                 if (int(k.size()) != spec.r()) {
                     throw ArgumentError("spectrum: expected min(r_x, r_y) = " +
                                         std::to_string(spec.r()) + " values, got " +
                                         std::to_string(k.size()));
                 }
                 spec.k = Eigen::Map<const RVector>(k.data(), long(k.size()));
                 return spec;
             }),
             py::arg("r_x"), py::arg("r_y"), py::arg("k"))
        .def_readonly("r_x", &CanonicalSpectrum::r_x)
        .def_readonly("r_y", &CanonicalSpectrum::r_y)
        .def_property_readonly("k",
            [](const CanonicalSpectrum& s) { return RVector(s.k); })
        .def("r", &CanonicalSpectrum::r)
        .def("__repr__", [](const CanonicalSpectrum& s) {
            std::string out = "CanonicalSpectrum(r_x=" + std::to_string(s.r_x) +
                              ", r_y=" + std::to_string(s.r_y) + ", k=[";
            for (int i = 0; i < s.r(); ++i) {
                if (i) out += ", ";
                out += std::to_string(s.k[i]);
            }
            return out + "])";
        });

    // --- canonical correlations -------------------------------------------
    m.def("canonical_correlations",
          [](CMatrix X, CMatrix Y) {
              return full_canonical_correlations(make_pair(std::move(X), std::move(Y)));
          },
          py::arg("X"), py::arg("Y"),
          "Full-rank sample canonical correlations of X (n x M) and Y (m x M).");
    m.def("reduced_canonical_correlations",
          [](CMatrix X, CMatrix Y, int r_x, int r_y) {
              const DataMatrixPair pair = make_pair(std::move(X), std::move(Y));
              return reduced_canonical_correlations(economy_svd(pair), r_x, r_y);
          },
          py::arg("X"), py::arg("Y"), py::arg("r_x"), py::arg("r_y"),
          "Canonical correlations after reducing each channel to its leading "
          "principal components.");

    // --- detection statistics ---------------------------------------------
    m.def("glrt_lambda", &glrt_lambda, py::arg("spectrum"), py::arg("M"), py::arg("s"));
    m.def("bartlett_lawley", &bartlett_lawley, py::arg("spectrum"), py::arg("M"),
          py::arg("s"));
    m.def("ht_threshold", &ht_threshold, py::arg("r_x"), py::arg("r_y"), py::arg("s"),
          py::arg("p_fa"));
    m.def("mdl_ic", &mdl_ic, py::arg("spectrum"), py::arg("M"), py::arg("s"));
    m.def("mdl_threshold", &mdl_threshold, py::arg("r_x"), py::arg("r_y"), py::arg("s"),
          py::arg("M"));
    m.def("min_step_ht", &min_step_ht, py::arg("spectrum"), py::arg("M"),
          py::arg("p_fa"));
    m.def("min_step_mdl_threshold", &min_step_mdl_threshold, py::arg("spectrum"),
          py::arg("M"));
    m.def("min_step_mdl_ic", &min_step_mdl_ic, py::arg("spectrum"), py::arg("M"));

    // --- detectors ---------------------------------------------------------
    m.def("detect",
          [](CMatrix X, CMatrix Y, const std::string& method,
             std::optional<double> p_fa, int r_max) {
              const DataMatrixPair pair = make_pair(std::move(X), std::move(Y));
              return decision_to_dict(detect(pair, make_detector(method, p_fa, r_max)));
          },
          py::arg("X"), py::arg("Y"), py::arg("method") = "ht",
          py::arg("p_fa") = py::none(), py::arg("r_max") = 0,
          "Estimate the number of correlated signals. Methods: 'ht', "
          "'mdl-threshold', 'mdl-ic' (joint rank and correlation selection), "
          "'traditional', 'full-mdl', 'full-aic' (full-dimension baselines). "
          "Returns a dict with d_hat, r_x_star, r_y_star, diagnostics.");

    // --- chi-square helpers ------------------------------------------------
    m.def("chi2_cdf", &chi2_cdf, py::arg("x"), py::arg("nu"));
    m.def("chi2_quantile", &chi2_quantile, py::arg("q"), py::arg("nu"));

    // --- synthetic data ----------------------------------------------------
    m.def("generate",
          [](const py::object& scenario, std::uint64_t seed, std::uint64_t trial) {
              const GeneratedDataset data =
                  generate(scenario_from_object(scenario), seed, trial);
              return py::make_tuple(data.pair.X, data.pair.Y);
          },
          py::arg("scenario"), py::arg("seed"), py::arg("trial") = 0,
          "Draw one (X, Y) sample from a scenario given as JSON text or dict "
          "(either the bare scenario object or a config file payload).");

    // --- Monte Carlo harness -----------------------------------------------
    m.def("run_experiment",
          [](const py::object& experiment) {
              const MonteCarloReport rep =
                  run_experiment(experiment_from_object(experiment));
              py::list cells;
              for (const auto& c : rep.cells) {
                  py::dict cell;
                  cell["sweep_value"] = c.sweep_value;
                  cell["detector"] = c.detector;
                  cell["p_d"] = c.p_d;
                  cell["trials"] = c.trials;
                  cell["err_trials"] = c.err_trials;
                  cell["d_hat_mode"] = c.d_hat_mode;
                  cell["rx_mode"] = c.rx_mode;
                  cell["ry_mode"] = c.ry_mode;
                  cells.append(std::move(cell));
              }
              return cells;
          },
          py::arg("experiment"),
          "Run a Monte Carlo experiment given as JSON text or dict; returns "
          "one dict per (sweep value, detector) cell.");

    // --- presets -----------------------------------------------------------
    m.def("preset",
          [](const std::string& name) {
              return experiment_to_json(ccorder::preset(name)).dump(2);
          },
          py::arg("name"),
          "JSON text of a built-in experiment preset (fig1, fig2, fig5, ...).");
    m.def("preset_names", &preset_names);
}
