#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccorder/config.hpp"
#include "ccorder/errors.hpp"

using json = nlohmann::json;
using ccorder::ArgumentError;
using ccorder::DetectorConfig;
using ccorder::DetectorMethod;
using ccorder::detector_from_json;
using ccorder::detector_to_json;
using ccorder::experiment_from_json;
using ccorder::experiment_to_json;
using ccorder::ExperimentSpec;
using ccorder::kSchemaVersion;
using ccorder::load_experiment_file;
using ccorder::load_scenario_file;
using ccorder::method_from_token;
using ccorder::method_token;
using ccorder::MixingKind;
using ccorder::NoiseKind;
using ccorder::preset;
using ccorder::preset_names;
using ccorder::ScenarioConfig;
using ccorder::scenario_from_json;
using ccorder::scenario_to_json;
using ccorder::SweepField;

namespace {

std::string config_path(const std::string& name) {
    return std::string(CONFIG_DIR) + "/" + name;
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(bool(in));
    return json::parse(in);
}

} // namespace

TEST_CASE("method tokens round-trip") {
    const std::vector<DetectorMethod> methods = {
        DetectorMethod::MaxMinHT,          DetectorMethod::MaxMinMdlThreshold,
        DetectorMethod::MaxMinMdlIc,       DetectorMethod::TraditionalHT,
        DetectorMethod::FullDimMdl,        DetectorMethod::FullDimAic,
    };
    for (DetectorMethod m : methods) {
        CHECK(method_from_token(method_token(m)) == m);
    }
    CHECK(method_token(DetectorMethod::MaxMinHT) == "ht");
    CHECK(method_token(DetectorMethod::MaxMinMdlThreshold) == "mdl-threshold");
    CHECK(method_token(DetectorMethod::MaxMinMdlIc) == "mdl-ic");
    CHECK(method_token(DetectorMethod::TraditionalHT) == "traditional");
    CHECK(method_token(DetectorMethod::FullDimMdl) == "full-mdl");
    CHECK(method_token(DetectorMethod::FullDimAic) == "full-aic");

    CHECK_THROWS_AS(method_from_token("bogus"), ArgumentError);
}

TEST_CASE("sev is refused with a pointer at the provided baselines") {
    try {
        method_from_token("sev");
        FAIL("expected ArgumentError");
    } catch (const ArgumentError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("sev") != std::string::npos);
        CHECK(msg.find("out of scope") != std::string::npos);
        CHECK(msg.find("full-mdl") != std::string::npos);
    }
}

TEST_CASE("preset catalogue") {
    const std::vector<std::string> names = preset_names();
    REQUIRE(names.size() == 8);
    CHECK(names == std::vector<std::string>{"fig1", "fig2", "fig5", "fig6", "fig7", "fig8",
                                            "fig9", "fig10"});
    for (const std::string& name : names) {
        const ExperimentSpec spec = preset(name);
        CHECK_NOTHROW(spec.validate());
        CHECK(spec.trials == 500);
        CHECK(!spec.detectors.empty());
        // fig2 is a fixed-sample-count experiment; every other preset sweeps.
        CHECK((spec.sweep.field != SweepField::None) == (name != "fig2"));
    }
    CHECK_THROWS_AS(preset("fig3"), ArgumentError);
    CHECK_THROWS_AS(preset(""), ArgumentError);
}

TEST_CASE("every preset survives a JSON round-trip unchanged") {
    for (const std::string& name : preset_names()) {
        const ExperimentSpec spec = preset(name);
        const json once = experiment_to_json(spec);
        const json twice = experiment_to_json(experiment_from_json(once));
        CHECK(once == twice);
        CHECK(once.dump() == twice.dump());
    }
}

TEST_CASE("shipped config files equal the built-in presets") {
    for (const std::string& name : preset_names()) {
        const json on_disk = parse_file(config_path(name + ".json"));
        const json built_in = experiment_to_json(preset(name));
        CHECK(on_disk == built_in);

        const ExperimentSpec loaded = load_experiment_file(config_path(name + ".json"));
        CHECK(experiment_to_json(loaded) == built_in);
    }
}

TEST_CASE("scenario serialization covers every mixing and noise branch") {
    ScenarioConfig cfg;
    cfg.n = 12;
    cfg.m = 10;
    cfg.M = 50;
    cfg.d = 2;
    cfg.f_x = 1;
    cfg.f_y = 2;
    cfg.sigma_x = {2.0, 1.5, 1.0};
    cfg.sigma_y = {2.0, 1.5, 1.0, 0.5};
    cfg.rho = {0.8, 0.6};
    cfg.mixing.kind = MixingKind::UlaSteering;
    cfg.mixing.angles_x_deg = {10.0, 20.0, 30.0};
    cfg.mixing.angles_y_deg = {40.0, 50.0, 60.0, 70.0};
    cfg.noise.kind = NoiseKind::SpatialMA;
    cfg.noise.coeffs = {0.5, 0.5, 0.5};
    cfg.noise.sigma2_w = 0.4;

    json j = scenario_to_json(cfg);
    const ScenarioConfig back = scenario_from_json(j);
    CHECK(scenario_to_json(back) == j);
    CHECK(back.mixing.kind == MixingKind::UlaSteering);
    CHECK(back.noise.kind == NoiseKind::SpatialMA);
    CHECK(back.noise.coeffs == cfg.noise.coeffs);

    cfg.mixing.kind = MixingKind::RandomUnitary;
    cfg.mixing.angles_x_deg.clear();
    cfg.mixing.angles_y_deg.clear();
    cfg.noise.kind = NoiseKind::SpatialAR1;
    cfg.noise.a = 0.65;
    cfg.noise.sigma2_w = 0.5775;
    j = scenario_to_json(cfg);
    const ScenarioConfig back2 = scenario_from_json(j);
    CHECK(scenario_to_json(back2) == j);
    CHECK(back2.noise.a == 0.65);

    cfg.noise.kind = NoiseKind::White;
    cfg.noise.sigma2 = 0.1;
    j = scenario_to_json(cfg);
    CHECK(scenario_to_json(scenario_from_json(j)) == j);
}

TEST_CASE("detector serialization rules") {
    DetectorConfig ht;
    ht.method = DetectorMethod::MaxMinHT;
    ht.p_fa = 0.05;
    ht.r_max = 10;
    json j = detector_to_json(ht);
    CHECK(j.contains("p_fa"));
    CHECK(j.contains("r_max"));
    const DetectorConfig ht_back = detector_from_json(j);
    CHECK(ht_back.method == DetectorMethod::MaxMinHT);
    CHECK(ht_back.p_fa == 0.05);
    CHECK(ht_back.r_max == 10);

    DetectorConfig ic;
    ic.method = DetectorMethod::MaxMinMdlIc;
    ic.r_max = 0;  // default cap: key omitted
    j = detector_to_json(ic);
    CHECK(!j.contains("p_fa"));  // threshold-free method
    CHECK(!j.contains("r_max"));

    DetectorConfig trad;
    trad.method = DetectorMethod::TraditionalHT;
    trad.p_fa = 0.01;
    j = detector_to_json(trad);
    CHECK(j.contains("p_fa"));
    CHECK(!j.contains("r_max"));

    CHECK_THROWS_AS(detector_from_json(json{{"method", "mdl-ic"}, {"p_fa", 0.01}}),
                    ArgumentError);
    CHECK_THROWS_AS(detector_from_json(json{{"method", "traditional"}, {"r_max", 5}}),
                    ArgumentError);
    CHECK_THROWS_AS(detector_from_json(json{{"method", "ht"}, {"p_fa", 1.5}}), ArgumentError);
    CHECK_THROWS_AS(detector_from_json(json{{"method", "ht"}, {"r_max", 0}}), ArgumentError);
}

TEST_CASE("strict parsing rejects unknown and missing keys") {
    json good = experiment_to_json(preset("fig2"));
    CHECK_NOTHROW(experiment_from_json(good));

    json j = good;
    j["surprise"] = 1;
    CHECK_THROWS_WITH_AS(experiment_from_json(j),
                         doctest::Contains("unknown key 'surprise'"), ArgumentError);

    j = good;
    j["scenario"]["samples_per_trial"] = 30;
    CHECK_THROWS_WITH_AS(experiment_from_json(j),
                         doctest::Contains("samples_per_trial"), ArgumentError);

    j = good;
    j["scenario"].erase("rho");
    CHECK_THROWS_WITH_AS(experiment_from_json(j), doctest::Contains("missing key 'rho'"),
                         ArgumentError);

    j = good;
    j.erase("detectors");
    CHECK_THROWS_AS(experiment_from_json(j), ArgumentError);

    j = good;
    j["trials"] = 2.5;
    CHECK_THROWS_AS(experiment_from_json(j), ArgumentError);

    j = good;
    j["seed"] = -4;
    CHECK_THROWS_AS(experiment_from_json(j), ArgumentError);

    j = good;
    j["scenario"]["mixing"]["kind"] = "haar";
    CHECK_THROWS_AS(experiment_from_json(j), ArgumentError);

    j = good;
    j["scenario"]["noise"] = {{"kind", "white"}};  // missing sigma2
    CHECK_THROWS_AS(experiment_from_json(j), ArgumentError);
}

TEST_CASE("sweep parsing rules") {
    json good = experiment_to_json(preset("fig9"));  // mean_rho sweep
    CHECK(good["sweep"]["field"] == "mean_rho");
    CHECK(good["sweep"].contains("rho_halfwidth"));
    CHECK_NOTHROW(experiment_from_json(good));

    json j = good;
    j["sweep"]["field"] = "snr";
    CHECK_THROWS_WITH_AS(experiment_from_json(j), doctest::Contains("unknown sweep field"),
                         ArgumentError);

    j = good;
    j["sweep"]["field"] = "samples";  // halfwidth now orphaned
    CHECK_THROWS_WITH_AS(experiment_from_json(j),
                         doctest::Contains("rho_halfwidth"), ArgumentError);

    j = experiment_to_json(preset("fig1"));
    j["sweep"]["values"] = {100.0, 50.0};
    CHECK_THROWS_AS(experiment_from_json(j), ArgumentError);
}

TEST_CASE("schema gate on config files") {
    const std::string tmp = std::string("/tmp/ccorder_config_test_") + std::to_string(::getpid()) +
                            ".json";
    {
        std::ofstream out(tmp);
        json j = experiment_to_json(preset("fig2"));
        j.erase("schema");
        out << j.dump();
    }
    CHECK_THROWS_WITH_AS(load_experiment_file(tmp), doctest::Contains("schema"), ArgumentError);

    {
        std::ofstream out(tmp);
        json j = experiment_to_json(preset("fig2"));
        j["schema"] = 2;
        out << j.dump();
    }
    CHECK_THROWS_WITH_AS(load_experiment_file(tmp), doctest::Contains("unsupported schema"),
                         ArgumentError);

    {
        std::ofstream out(tmp);
        out << "{ not json";
    }
    CHECK_THROWS_WITH_AS(load_experiment_file(tmp), doctest::Contains("not valid JSON"),
                         ArgumentError);

    std::remove(tmp.c_str());
    CHECK_THROWS_WITH_AS(load_experiment_file(tmp), doctest::Contains("cannot open"),
                         ArgumentError);
}

TEST_CASE("load_scenario_file reads both document shapes") {
    // Full experiment document: the scenario block is extracted.
    const ScenarioConfig fig5 = load_scenario_file(config_path("fig5.json"));
    CHECK(fig5.n == 40);
    CHECK(fig5.m == 40);
    CHECK(fig5.d == 2);
    CHECK(fig5.f_x == 3);
    CHECK(fig5.f_y == 4);
    CHECK(fig5.noise.kind == NoiseKind::SpatialMA);

    // Scenario-only document.
    const ScenarioConfig hist = load_scenario_file(config_path("hist_example.json"));
    CHECK(hist.n == 100);
    CHECK(hist.m == 100);
    CHECK(hist.M == 50);
    CHECK(hist.d == 3);
    REQUIRE(hist.rho.size() == 3);
    CHECK(hist.rho[0] == 0.9);
    CHECK(hist.noise.kind == NoiseKind::White);
    CHECK(hist.noise.sigma2 == 0.1);
}

TEST_CASE("preset fig10 sweeps the array geometry") {
    const ExperimentSpec spec = preset("fig10");
    CHECK(spec.scenario.mixing.kind == MixingKind::UlaSteering);
    REQUIRE(spec.scenario.mixing.angles_x_deg.size() == 5);
    REQUIRE(spec.scenario.mixing.angles_y_deg.size() == 6);
    CHECK(spec.sweep.field == SweepField::AngularSpacing);
    REQUIRE(spec.sweep.values.size() == 10);
    CHECK(spec.sweep.values.front() == 1.0);
    CHECK(spec.sweep.values.back() == 10.0);
}
