#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ccorder/datagen.hpp"
#include "ccorder/detectors.hpp"
#include "ccorder/harness.hpp"

namespace ccorder {

/// Version tag that every config document must carry ("schema": 1).
inline constexpr int kSchemaVersion = 1;

/// @name Detector method tokens
/// String tokens used in JSON configs and on the command line:
/// "ht", "mdl-threshold", "mdl-ic", "traditional", "full-mdl", "full-aic".
/// The token "sev" is recognized but refused with a message pointing at the
/// full-dimension baselines (single-channel rank selection is out of scope).
/// @{
DetectorMethod method_from_token(const std::string& token);
std::string method_token(DetectorMethod method);
/// @}

/// @name JSON (de)serialization
/// All parsers are strict: unknown keys, missing keys, and out-of-range
/// values raise ArgumentError with the offending key in the message.
/// @{
nlohmann::json scenario_to_json(const ScenarioConfig& cfg);
ScenarioConfig scenario_from_json(const nlohmann::json& j);

nlohmann::json detector_to_json(const DetectorConfig& cfg);
DetectorConfig detector_from_json(const nlohmann::json& j);

nlohmann::json experiment_to_json(const ExperimentSpec& spec);
ExperimentSpec experiment_from_json(const nlohmann::json& j);
/// @}

/// Parses a full experiment document (schema, scenario, detectors, trials,
/// seed, optional sweep) from a file.
ExperimentSpec load_experiment_file(const std::string& path);

/// Extracts just the scenario from a config file.  Accepts both full
/// experiment documents and scenario-only documents ({"schema":1,
/// "scenario":{...}}).
ScenarioConfig load_scenario_file(const std::string& path);

/// Returns the built-in experiment preset with the given name.
/// Presets fig1..fig10 are ready-made benchmark experiments; see the README
/// for their parameter tables.
ExperimentSpec preset(const std::string& name);

/// Names of all built-in presets, in canonical order.
std::vector<std::string> preset_names();

} // namespace ccorder
