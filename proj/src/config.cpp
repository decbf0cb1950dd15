#include "ccorder/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <stdexcept>

#include "ccorder/errors.hpp"

namespace ccorder {

using nlohmann::json;

namespace {

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) { known = true; break; }
        }
        if (!known) {
            throw ArgumentError("config: unknown key '" + item.key() + "' in " + where);
        }
    }
}

const json& require(const json& j, const std::string& where, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ArgumentError("config: missing key '" + std::string(key) + "' in " + where);
    }
    return *it;
}

int get_int(const json& j, const std::string& where, const char* key) {
    const json& v = require(j, where, key);
    if (!v.is_number_integer()) {
        throw ArgumentError("config: '" + std::string(key) + "' in " + where +
                            " must be an integer");
    }
    return v.get<int>();
}

double get_double(const json& j, const std::string& where, const char* key) {
    const json& v = require(j, where, key);
    if (!v.is_number()) {
        throw ArgumentError("config: '" + std::string(key) + "' in " + where +
                            " must be a number");
    }
    return v.get<double>();
}

std::uint64_t get_seed(const json& j, const std::string& where, const char* key) {
    const json& v = require(j, where, key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    throw ArgumentError("config: '" + std::string(key) + "' in " + where +
                        " must be a nonnegative integer");
}

std::vector<double> get_double_array(const json& j, const std::string& where, const char* key) {
    const json& v = require(j, where, key);
    if (!v.is_array()) {
        throw ArgumentError("config: '" + std::string(key) + "' in " + where +
                            " must be an array of numbers");
    }
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number()) {
            throw ArgumentError("config: '" + std::string(key) + "' in " + where +
                                " must contain only numbers");
        }
        out.push_back(e.get<double>());
    }
    return out;
}

const char* mixing_token(MixingKind kind) {
    return kind == MixingKind::RandomUnitary ? "random_unitary" : "ula";
}

const char* noise_token(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::White: return "white";
        case NoiseKind::SpatialMA: return "spatial_ma";
        default: return "spatial_ar1";
    }
}

const char* sweep_token(SweepField field) {
    switch (field) {
        case SweepField::Samples: return "samples";
        case SweepField::Dimension: return "dimension";
        case SweepField::IndependentVariance: return "independent_variance";
        case SweepField::MeanRho: return "mean_rho";
        case SweepField::AngularSpacing: return "angular_spacing";
        default: return "none";
    }
}

SweepField sweep_field_from_token(const std::string& token) {
    if (token == "samples") return SweepField::Samples;
    if (token == "dimension") return SweepField::Dimension;
    if (token == "independent_variance") return SweepField::IndependentVariance;
    if (token == "mean_rho") return SweepField::MeanRho;
    if (token == "angular_spacing") return SweepField::AngularSpacing;
    throw ArgumentError("config: unknown sweep field '" + token +
                        "' (expected samples, dimension, independent_variance, "
                        "mean_rho, or angular_spacing)");
}

MixingModel mixing_from_json(const json& j) {
    if (!j.is_object()) throw ArgumentError("config: 'mixing' must be an object");
    const json& kind = require(j, "mixing", "kind");
    MixingModel model;
    if (kind == "random_unitary") {
        check_keys(j, "mixing", {"kind"});
        model.kind = MixingKind::RandomUnitary;
    } else if (kind == "ula") {
        check_keys(j, "mixing", {"kind", "angles_x_deg", "angles_y_deg"});
        model.kind = MixingKind::UlaSteering;
        model.angles_x_deg = get_double_array(j, "mixing", "angles_x_deg");
        model.angles_y_deg = get_double_array(j, "mixing", "angles_y_deg");
    } else {
        throw ArgumentError("config: unknown mixing kind '" + kind.dump() +
                            "' (expected random_unitary or ula)");
    }
    return model;
}

NoiseModel noise_from_json(const json& j) {
    if (!j.is_object()) throw ArgumentError("config: 'noise' must be an object");
    const json& kind = require(j, "noise", "kind");
    NoiseModel model;
    if (kind == "white") {
        check_keys(j, "noise", {"kind", "sigma2"});
        model.kind = NoiseKind::White;
        model.sigma2 = get_double(j, "noise", "sigma2");
    } else if (kind == "spatial_ma") {
        check_keys(j, "noise", {"kind", "coeffs", "sigma2_w"});
        model.kind = NoiseKind::SpatialMA;
        model.coeffs = get_double_array(j, "noise", "coeffs");
        model.sigma2_w = get_double(j, "noise", "sigma2_w");
    } else if (kind == "spatial_ar1") {
        check_keys(j, "noise", {"kind", "a", "sigma2_w"});
        model.kind = NoiseKind::SpatialAR1;
        model.a = get_double(j, "noise", "a");
        model.sigma2_w = get_double(j, "noise", "sigma2_w");
    } else {
        throw ArgumentError("config: unknown noise kind '" + kind.dump() +
                            "' (expected white, spatial_ma, or spatial_ar1)");
    }
    return model;
}

SweepSpec sweep_from_json(const json& j) {
    if (!j.is_object()) throw ArgumentError("config: 'sweep' must be an object");
    check_keys(j, "sweep", {"field", "values", "rho_halfwidth"});
    const json& field = require(j, "sweep", "field");
    if (!field.is_string()) throw ArgumentError("config: sweep 'field' must be a string");
    SweepSpec sweep;
    sweep.field = sweep_field_from_token(field.get<std::string>());
    sweep.values = get_double_array(j, "sweep", "values");
    if (j.contains("rho_halfwidth")) {
        if (sweep.field != SweepField::MeanRho) {
            throw ArgumentError("config: 'rho_halfwidth' is only valid for mean_rho sweeps");
        }
        sweep.rho_halfwidth = get_double(j, "sweep", "rho_halfwidth");
        if (sweep.rho_halfwidth < 0.0) {
            throw ArgumentError("config: 'rho_halfwidth' must be nonnegative");
        }
    }
    return sweep;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ArgumentError("cannot open config file: " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ArgumentError("config: " + path + " is not valid JSON: " + e.what());
    }
}

void check_schema(const json& j, const std::string& path) {
    if (!j.is_object()) {
        throw ArgumentError("config: " + path + " must contain a JSON object");
    }
    auto it = j.find("schema");
    if (it == j.end()) {
        throw ArgumentError("config: " + path + " is missing the \"schema\" key");
    }
    if (!it->is_number_integer() || it->get<int>() != kSchemaVersion) {
        throw ArgumentError("config: " + path + " has unsupported schema version " +
                            it->dump() + " (this build reads schema " +
                            std::to_string(kSchemaVersion) + ")");
    }
}

std::vector<double> rep(double value, int count) {
    return std::vector<double>(static_cast<std::size_t>(count), value);
}

DetectorConfig det(DetectorMethod method, int r_max, double p_fa = 0.005) {
    DetectorConfig cfg;
    cfg.method = method;
    cfg.p_fa = p_fa;
    cfg.r_max = r_max;
    return cfg;
}

// r_max in the presets is chosen so that min(r_x, r_y) stays small relative
// to the smallest swept sample count: the chi-square null of the rank-pair
// tests degrades badly as r_x + r_y approaches M, and rank pairs in that
// regime produce spurious order estimates.  Each cap is still several times
// d + max(f_x, f_y) for its scenario.

ExperimentSpec preset_fig1() {
    ExperimentSpec spec;
    spec.scenario.n = 20;
    spec.scenario.m = 20;
    spec.scenario.M = 400;
    spec.scenario.d = 3;
    spec.scenario.sigma_x = rep(1.0, 3);
    spec.scenario.sigma_y = rep(1.0, 3);
    spec.scenario.rho = {0.9, 0.7, 0.5};
    spec.scenario.noise.sigma2 = 0.01;
    spec.sweep.field = SweepField::Samples;
    spec.sweep.values = {30, 50, 100, 200, 400};
    spec.detectors = {
        det(DetectorMethod::MaxMinHT, 10),
        det(DetectorMethod::MaxMinMdlThreshold, 10),
        det(DetectorMethod::MaxMinMdlIc, 10),
        det(DetectorMethod::TraditionalHT, 0),
        det(DetectorMethod::FullDimMdl, 0),
        det(DetectorMethod::FullDimAic, 0),
    };
    spec.trials = 500;
    spec.seed = 101;
    return spec;
}

ExperimentSpec preset_fig2() {
    ExperimentSpec spec;
    spec.scenario.n = 20;
    spec.scenario.m = 20;
    spec.scenario.M = 30;
    spec.scenario.d = 3;
    spec.scenario.f_x = 2;
    spec.scenario.f_y = 2;
    const double sc = std::sqrt(1.5), si = std::sqrt(5.0);
    spec.scenario.sigma_x = {sc, sc, sc, si, si};
    spec.scenario.sigma_y = {sc, sc, sc, si, si};
    spec.scenario.rho = {0.9, 0.8, 0.7};
    spec.scenario.noise.sigma2 = 0.01;
    spec.detectors = {
        det(DetectorMethod::MaxMinHT, 10),
        det(DetectorMethod::MaxMinMdlThreshold, 10),
        det(DetectorMethod::MaxMinMdlIc, 10),
    };
    spec.trials = 500;
    spec.seed = 102;
    return spec;
}

ScenarioConfig colored_ma_scenario() {
    ScenarioConfig sc;
    sc.n = 40;
    sc.m = 40;
    sc.M = 60;
    sc.d = 2;
    sc.f_x = 3;
    sc.f_y = 4;
    const double c = std::sqrt(5.0), i = std::sqrt(1.5);
    sc.sigma_x = {c, c, i, i, i};
    sc.sigma_y = {c, c, i, i, i, i};
    sc.rho = {0.8, 0.7};
    sc.noise.kind = NoiseKind::SpatialMA;
    sc.noise.coeffs = rep(1.0 / std::sqrt(3.0), 3);
    sc.noise.sigma2_w = 1.0 / 3.0;
    return sc;
}

ExperimentSpec preset_fig5() {
    ExperimentSpec spec;
    spec.scenario = colored_ma_scenario();
    // Correlation coefficients weakened relative to the fig6/fig10 family so
    // the sweep actually exercises the small-sample regime: with (0.8, 0.7)
    // every max-min detector is already nearly saturated at M = 60.
    spec.scenario.rho = {0.4, 0.3};
    spec.sweep.field = SweepField::Samples;
    spec.sweep.values = {60, 120, 240, 400};
    spec.detectors = {
        det(DetectorMethod::MaxMinHT, 20, 0.005),
        det(DetectorMethod::MaxMinHT, 20, 0.05),
        det(DetectorMethod::MaxMinMdlThreshold, 20),
        det(DetectorMethod::MaxMinMdlIc, 20),
    };
    spec.trials = 500;
    spec.seed = 105;
    return spec;
}

ExperimentSpec preset_fig6() {
    ExperimentSpec spec;
    spec.scenario = colored_ma_scenario();
    spec.scenario.M = 100;
    spec.scenario.noise = NoiseModel{};  // white, unit variance
    spec.sweep.field = SweepField::Dimension;
    spec.sweep.values = {20, 40, 80, 120, 160};
    spec.detectors = {
        det(DetectorMethod::MaxMinHT, 20, 0.005),
        det(DetectorMethod::MaxMinHT, 20, 0.05),
        det(DetectorMethod::MaxMinMdlThreshold, 20),
        det(DetectorMethod::MaxMinMdlIc, 20),
        det(DetectorMethod::TraditionalHT, 0),
        det(DetectorMethod::FullDimMdl, 0),
        det(DetectorMethod::FullDimAic, 0),
    };
    spec.trials = 500;
    spec.seed = 106;
    return spec;
}

ExperimentSpec preset_fig7(int f) {
    ExperimentSpec spec;
    spec.scenario.n = 80;
    spec.scenario.m = 80;
    spec.scenario.M = 150;
    spec.scenario.d = 7;
    spec.scenario.f_x = f;
    spec.scenario.f_y = f;
    const double sc = std::sqrt(10.0), si = std::sqrt(2.0);
    spec.scenario.sigma_x = rep(sc, 7);
    spec.scenario.sigma_y = rep(sc, 7);
    for (int i = 0; i < f; ++i) {
        spec.scenario.sigma_x.push_back(si);
        spec.scenario.sigma_y.push_back(si);
    }
    spec.scenario.rho = {0.92, 0.9, 0.88, 0.85, 0.83, 0.8, 0.75};
    spec.scenario.noise.kind = NoiseKind::SpatialAR1;
    spec.scenario.noise.a = 0.65;
    spec.scenario.noise.sigma2_w = 1.0 - 0.65 * 0.65;  // unit stationary variance
    spec.sweep.field = SweepField::IndependentVariance;
    spec.sweep.values = {2, 5, 8, 10, 12, 15};
    spec.detectors = {
        det(DetectorMethod::MaxMinHT, 25, 0.005),
        det(DetectorMethod::MaxMinHT, 25, 0.05),
        det(DetectorMethod::MaxMinMdlThreshold, 25),
        det(DetectorMethod::MaxMinMdlIc, 25),
    };
    spec.trials = 500;
    spec.seed = f == 2 ? 107 : 108;
    return spec;
}

ExperimentSpec preset_fig9() {
    ExperimentSpec spec;
    spec.scenario.n = 100;
    spec.scenario.m = 100;
    spec.scenario.M = 180;
    spec.scenario.d = 5;
    spec.scenario.f_x = 2;
    spec.scenario.f_y = 2;
    const double sc = std::sqrt(8.0), si = std::sqrt(10.0);
    spec.scenario.sigma_x = {sc, sc, sc, sc, sc, si, si};
    spec.scenario.sigma_y = {sc, sc, sc, sc, sc, si, si};
    spec.scenario.rho = rep(0.65, 5);
    spec.scenario.noise.kind = NoiseKind::SpatialAR1;
    spec.scenario.noise.a = 0.65;
    spec.scenario.noise.sigma2_w = 1.0 - 0.65 * 0.65;
    spec.sweep.field = SweepField::MeanRho;
    spec.sweep.values = {0.35, 0.5, 0.65, 0.8, 0.95};
    spec.sweep.rho_halfwidth = 0.05;
    spec.detectors = {
        det(DetectorMethod::MaxMinHT, 25, 0.005),
        det(DetectorMethod::MaxMinHT, 25, 0.05),
        det(DetectorMethod::MaxMinMdlThreshold, 25),
        det(DetectorMethod::MaxMinMdlIc, 25),
    };
    spec.trials = 500;
    spec.seed = 109;
    return spec;
}

ExperimentSpec preset_fig10() {
    ExperimentSpec spec;
    spec.scenario = colored_ma_scenario();
    spec.scenario.mixing.kind = MixingKind::UlaSteering;
    spec.scenario.mixing.angles_x_deg = {20, 21, 22, 23, 24};
    spec.scenario.mixing.angles_y_deg = {50, 51, 52, 53, 54, 55};
    spec.sweep.field = SweepField::AngularSpacing;
    spec.sweep.values = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    spec.detectors = {
        det(DetectorMethod::MaxMinHT, 15, 0.005),
        det(DetectorMethod::MaxMinHT, 15, 0.05),
        det(DetectorMethod::MaxMinMdlThreshold, 15),
        det(DetectorMethod::MaxMinMdlIc, 15),
    };
    spec.trials = 500;
    spec.seed = 110;
    return spec;
}

} // namespace

DetectorMethod method_from_token(const std::string& token) {
    if (token == "ht") return DetectorMethod::MaxMinHT;
    if (token == "mdl-threshold") return DetectorMethod::MaxMinMdlThreshold;
    if (token == "mdl-ic") return DetectorMethod::MaxMinMdlIc;
    if (token == "traditional") return DetectorMethod::TraditionalHT;
    if (token == "full-mdl") return DetectorMethod::FullDimMdl;
    if (token == "full-aic") return DetectorMethod::FullDimAic;
    if (token == "sev") {
        throw ArgumentError(
            "method 'sev' is not available: single-channel sample-eigenvalue rank "
            "selection is out of scope. The full-dimension baselines 'traditional', "
            "'full-mdl', and 'full-aic' are provided instead.");
    }
    throw ArgumentError("unknown detector method '" + token +
                        "' (expected ht, mdl-threshold, mdl-ic, traditional, "
                        "full-mdl, or full-aic)");
}

std::string method_token(DetectorMethod method) {
    switch (method) {
        case DetectorMethod::MaxMinHT: return "ht";
        case DetectorMethod::MaxMinMdlThreshold: return "mdl-threshold";
        case DetectorMethod::MaxMinMdlIc: return "mdl-ic";
        case DetectorMethod::TraditionalHT: return "traditional";
        case DetectorMethod::FullDimMdl: return "full-mdl";
        default: return "full-aic";
    }
}

json scenario_to_json(const ScenarioConfig& cfg) {
    json j;
    j["n"] = cfg.n;
    j["m"] = cfg.m;
    j["samples"] = cfg.M;
    j["d"] = cfg.d;
    j["f_x"] = cfg.f_x;
    j["f_y"] = cfg.f_y;
    j["sigma_x"] = cfg.sigma_x;
    j["sigma_y"] = cfg.sigma_y;
    j["rho"] = cfg.rho;
    json mix;
    mix["kind"] = mixing_token(cfg.mixing.kind);
    if (cfg.mixing.kind == MixingKind::UlaSteering) {
        mix["angles_x_deg"] = cfg.mixing.angles_x_deg;
        mix["angles_y_deg"] = cfg.mixing.angles_y_deg;
    }
    j["mixing"] = std::move(mix);
    json noise;
    noise["kind"] = noise_token(cfg.noise.kind);
    switch (cfg.noise.kind) {
        case NoiseKind::White:
            noise["sigma2"] = cfg.noise.sigma2;
            break;
        case NoiseKind::SpatialMA:
            noise["coeffs"] = cfg.noise.coeffs;
            noise["sigma2_w"] = cfg.noise.sigma2_w;
            break;
        case NoiseKind::SpatialAR1:
            noise["a"] = cfg.noise.a;
            noise["sigma2_w"] = cfg.noise.sigma2_w;
            break;
    }
    j["noise"] = std::move(noise);
    return j;
}

ScenarioConfig scenario_from_json(const json& j) {
    if (!j.is_object()) throw ArgumentError("config: 'scenario' must be an object");
    check_keys(j, "scenario", {"n", "m", "samples", "d", "f_x", "f_y",
                               "sigma_x", "sigma_y", "rho", "mixing", "noise"});
    ScenarioConfig cfg;
    cfg.n = get_int(j, "scenario", "n");
    cfg.m = get_int(j, "scenario", "m");
    cfg.M = get_int(j, "scenario", "samples");
    cfg.d = get_int(j, "scenario", "d");
    cfg.f_x = get_int(j, "scenario", "f_x");
    cfg.f_y = get_int(j, "scenario", "f_y");
    cfg.sigma_x = get_double_array(j, "scenario", "sigma_x");
    cfg.sigma_y = get_double_array(j, "scenario", "sigma_y");
    cfg.rho = get_double_array(j, "scenario", "rho");
    cfg.mixing = mixing_from_json(require(j, "scenario", "mixing"));
    cfg.noise = noise_from_json(require(j, "scenario", "noise"));
    cfg.validate();
    return cfg;
}

json detector_to_json(const DetectorConfig& cfg) {
    json j;
    j["method"] = method_token(cfg.method);
    if (cfg.method == DetectorMethod::MaxMinHT ||
        cfg.method == DetectorMethod::TraditionalHT) {
        j["p_fa"] = cfg.p_fa;
    }
    if (cfg.r_max != 0) {
        j["r_max"] = cfg.r_max;
    }
    return j;
}

DetectorConfig detector_from_json(const json& j) {
    if (!j.is_object()) throw ArgumentError("config: detector entries must be objects");
    check_keys(j, "detectors", {"method", "p_fa", "r_max"});
    const json& method = require(j, "detectors", "method");
    if (!method.is_string()) {
        throw ArgumentError("config: detector 'method' must be a string");
    }
    DetectorConfig cfg;
    cfg.method = method_from_token(method.get<std::string>());
    const bool uses_pfa = cfg.method == DetectorMethod::MaxMinHT ||
                          cfg.method == DetectorMethod::TraditionalHT;
    const bool max_min = cfg.method == DetectorMethod::MaxMinHT ||
                         cfg.method == DetectorMethod::MaxMinMdlThreshold ||
                         cfg.method == DetectorMethod::MaxMinMdlIc;
    if (j.contains("p_fa")) {
        if (!uses_pfa) {
            throw ArgumentError("config: 'p_fa' is only valid for methods ht and traditional");
        }
        cfg.p_fa = get_double(j, "detectors", "p_fa");
        if (!(cfg.p_fa > 0.0 && cfg.p_fa < 1.0)) {
            throw ArgumentError("config: 'p_fa' must lie in (0, 1)");
        }
    }
    if (j.contains("r_max")) {
        if (!max_min) {
            throw ArgumentError("config: 'r_max' is only valid for the max-min methods");
        }
        cfg.r_max = get_int(j, "detectors", "r_max");
        if (cfg.r_max < 1) {
            throw ArgumentError("config: 'r_max' must be a positive integer");
        }
    }
    return cfg;
}

json experiment_to_json(const ExperimentSpec& spec) {
    json j;
    j["schema"] = kSchemaVersion;
    j["scenario"] = scenario_to_json(spec.scenario);
    if (spec.sweep.field != SweepField::None) {
        json sw;
        sw["field"] = sweep_token(spec.sweep.field);
        sw["values"] = spec.sweep.values;
        if (spec.sweep.field == SweepField::MeanRho) {
            sw["rho_halfwidth"] = spec.sweep.rho_halfwidth;
        }
        j["sweep"] = std::move(sw);
    }
    json dets = json::array();
    for (const auto& d : spec.detectors) dets.push_back(detector_to_json(d));
    j["detectors"] = std::move(dets);
    j["trials"] = spec.trials;
    j["seed"] = spec.seed;
    return j;
}

ExperimentSpec experiment_from_json(const json& j) {
    if (!j.is_object()) throw ArgumentError("config: experiment must be a JSON object");
    check_keys(j, "experiment", {"schema", "scenario", "sweep", "detectors",
                                 "trials", "seed"});
    ExperimentSpec spec;
    spec.scenario = scenario_from_json(require(j, "experiment", "scenario"));
    if (j.contains("sweep")) {
        spec.sweep = sweep_from_json(j.at("sweep"));
    }
    const json& dets = require(j, "experiment", "detectors");
    if (!dets.is_array()) {
        throw ArgumentError("config: 'detectors' must be an array");
    }
    for (const auto& d : dets) spec.detectors.push_back(detector_from_json(d));
    spec.trials = get_int(j, "experiment", "trials");
    spec.seed = get_seed(j, "experiment", "seed");
    spec.validate();
    return spec;
}

ExperimentSpec load_experiment_file(const std::string& path) {
    json j = read_json_file(path);
    check_schema(j, path);
    try {
        return experiment_from_json(j);
    } catch (const ArgumentError& e) {
        throw ArgumentError(std::string(e.what()) + " (file: " + path + ")");
    }
}

ScenarioConfig load_scenario_file(const std::string& path) {
    json j = read_json_file(path);
    check_schema(j, path);
    const json& sc = require(j, path, "scenario");
    try {
        return scenario_from_json(sc);
    } catch (const ArgumentError& e) {
        throw ArgumentError(std::string(e.what()) + " (file: " + path + ")");
    }
}

ExperimentSpec preset(const std::string& name) {
    if (name == "fig1") return preset_fig1();
    if (name == "fig2") return preset_fig2();
    if (name == "fig5") return preset_fig5();
    if (name == "fig6") return preset_fig6();
    if (name == "fig7") return preset_fig7(2);
    if (name == "fig8") return preset_fig7(4);
    if (name == "fig9") return preset_fig9();
    if (name == "fig10") return preset_fig10();
    std::string known;
    for (const auto& p : preset_names()) {
        if (!known.empty()) known += ", ";
        known += p;
    }
    throw ArgumentError("unknown preset '" + name + "' (available: " + known + ")");
}

std::vector<std::string> preset_names() {
    return {"fig1", "fig2", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10"};
}

} // namespace ccorder
