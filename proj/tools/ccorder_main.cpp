#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccorder/cca.hpp"
#include "ccorder/config.hpp"
#include "ccorder/csvio.hpp"
#include "ccorder/detectors.hpp"
#include "ccorder/errors.hpp"
#include "ccorder/harness.hpp"

namespace {

constexpr int kExitArgument = 2;
constexpr int kExitComputation = 3;

struct DetectArgs {
    std::string x_path;
    std::string y_path;
    std::string method;
    double p_fa = 0.005;
    bool p_fa_given = false;
    int r_max = 0;
    bool as_json = false;
};

struct SimulateArgs {
    std::string preset_name;
    std::string config_path;
    int trials = 0;
    bool trials_given = false;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out_path;
    bool dump_config = false;
};

struct HistArgs {
    std::string config_path;
    int r_x = 0;
    int r_y = 0;
    int s = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string out_path;
};

void run_detect(const DetectArgs& args) {
    const ccorder::DetectorMethod method = ccorder::method_from_token(args.method);
    const bool uses_pfa = method == ccorder::DetectorMethod::MaxMinHT ||
                          method == ccorder::DetectorMethod::TraditionalHT;
    const bool max_min = method == ccorder::DetectorMethod::MaxMinHT ||
                         method == ccorder::DetectorMethod::MaxMinMdlThreshold ||
                         method == ccorder::DetectorMethod::MaxMinMdlIc;
    if (args.p_fa_given && !uses_pfa) {
        throw ccorder::ArgumentError("--pfa only applies to methods ht and traditional");
    }
    if (args.r_max != 0 && !max_min) {
        throw ccorder::ArgumentError("--rmax only applies to the max-min methods");
    }

    ccorder::DataMatrixPair pair;
    pair.X = ccorder::read_matrix_csv(args.x_path);
    pair.Y = ccorder::read_matrix_csv(args.y_path);
    pair.validate();

    int d_hat = 0, r_x = 0, r_y = 0;
    if (max_min) {
        ccorder::DetectorConfig cfg;
        cfg.method = method;
        cfg.p_fa = args.p_fa;
        cfg.r_max = args.r_max;
        const ccorder::DetectorDecision decision = ccorder::detect(pair, cfg);
        d_hat = decision.d_hat;
        r_x = decision.r_x_star;
        r_y = decision.r_y_star;
    } else {
        if (method == ccorder::DetectorMethod::TraditionalHT) {
            d_hat = ccorder::traditional_series_test(pair, args.p_fa);
        } else {
            const auto penalty = method == ccorder::DetectorMethod::FullDimMdl
                                     ? ccorder::IcPenalty::Mdl
                                     : ccorder::IcPenalty::Aic;
            d_hat = ccorder::full_dim_ic(pair, penalty);
        }
        r_x = pair.n();
        r_y = pair.m();
    }

    if (args.as_json) {
        nlohmann::json out;
        out["method"] = args.method;
        out["d_hat"] = d_hat;
        out["r_x"] = r_x;
        out["r_y"] = r_y;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "method: " << args.method << "\n"
                  << "d_hat: " << d_hat << "\n"
                  << "r_x: " << r_x << "\n"
                  << "r_y: " << r_y << "\n";
    }
}

void run_simulate(const SimulateArgs& args) {
    if (args.preset_name.empty() == args.config_path.empty()) {
        throw ccorder::ArgumentError("simulate needs exactly one of --preset or --config");
    }
    ccorder::ExperimentSpec spec = args.preset_name.empty()
                                       ? ccorder::load_experiment_file(args.config_path)
                                       : ccorder::preset(args.preset_name);
    if (args.trials_given) spec.trials = args.trials;
    if (args.seed_given) spec.seed = args.seed;
    spec.validate();

    if (args.dump_config) {
        std::cout << ccorder::experiment_to_json(spec).dump(2) << "\n";
        return;
    }
    if (args.out_path.empty()) {
        throw ccorder::ArgumentError("simulate needs --out (or --dump-config)");
    }

    const ccorder::MonteCarloReport report = ccorder::run_experiment(spec);
    ccorder::emit_csv(report, args.out_path);
    for (const auto& cell : report.cells) {
        std::cout << "sweep=" << cell.sweep_value << " " << cell.detector
                  << " p_d=" << cell.p_d << " err_trials=" << cell.err_trials << "\n";
    }
    std::cout << "wrote " << args.out_path << " (" << report.cells.size() << " rows)\n";
}

void run_hist(const HistArgs& args) {
    const ccorder::ScenarioConfig scenario = ccorder::load_scenario_file(args.config_path);
    const ccorder::HistogramReport hist =
        ccorder::run_statistic_histogram(scenario, args.r_x, args.r_y, args.s,
                                         args.trials, args.seed);
    ccorder::emit_csv(hist, args.out_path);
    std::cout << "dof: " << hist.dof << "\n"
              << "threshold(p_fa=" << hist.p_fa << "): " << hist.threshold << "\n"
              << "samples: " << hist.samples.size() << "\n"
              << "err_trials: " << hist.err_trials << "\n"
              << "wrote " << args.out_path << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Joint order selection for two-channel PCA-CCA: estimates the PCA "
                 "ranks and the number of correlated signals between two data sets."};
    app.require_subcommand(1);

    DetectArgs detect_args;
    CLI::App* detect = app.add_subcommand(
        "detect", "Estimate the number of correlated signals in two CSV matrices");
    detect->add_option("--x", detect_args.x_path, "X-channel matrix CSV (rows = components)")
        ->required()->check(CLI::ExistingFile);
    detect->add_option("--y", detect_args.y_path, "Y-channel matrix CSV")
        ->required()->check(CLI::ExistingFile);
    detect->add_option("--method", detect_args.method,
                       "ht | mdl-threshold | mdl-ic | traditional | full-mdl | full-aic")
        ->required();
    CLI::Option* pfa_opt = detect->add_option(
        "--pfa", detect_args.p_fa,
        "Family-wise false-alarm probability for ht / traditional (default 0.005)")
        ->check(CLI::Range(1e-12, 1.0 - 1e-12));
    detect->add_option("--rmax", detect_args.r_max,
                       "Rank scan cap for the max-min methods (default min(n, m, M/2))")
        ->check(CLI::PositiveNumber);
    detect->add_flag("--json", detect_args.as_json, "Emit the decision as one JSON object");

    SimulateArgs sim_args;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run a Monte Carlo experiment and write a detection-report CSV");
    simulate->add_option("--preset", sim_args.preset_name,
                         "Built-in experiment (fig1, fig2, fig5, ..., fig10)");
    simulate->add_option("--config", sim_args.config_path, "Experiment JSON file")
        ->check(CLI::ExistingFile);
    CLI::Option* trials_opt =
        simulate->add_option("--trials", sim_args.trials, "Override the trial count")
            ->check(CLI::PositiveNumber);
    CLI::Option* seed_opt =
        simulate->add_option("--seed", sim_args.seed, "Override the master seed");
    simulate->add_option("--out", sim_args.out_path, "Output CSV path");
    simulate->add_flag("--dump-config", sim_args.dump_config,
                       "Print the effective experiment JSON and exit without running");

    HistArgs hist_args;
    CLI::App* hist = app.add_subcommand(
        "hist", "Sample the statistic C(r_x, r_y, s) across trials of one scenario");
    hist->add_option("--config", hist_args.config_path,
                     "Scenario or experiment JSON file")->required()->check(CLI::ExistingFile);
    hist->add_option("--rx", hist_args.r_x, "PCA rank of the x channel")
        ->required()->check(CLI::PositiveNumber);
    hist->add_option("--ry", hist_args.r_y, "PCA rank of the y channel")
        ->required()->check(CLI::PositiveNumber);
    hist->add_option("--s", hist_args.s, "Hypothesized number of correlated signals")
        ->required()->check(CLI::NonNegativeNumber);
    hist->add_option("--trials", hist_args.trials, "Number of trials")
        ->required()->check(CLI::PositiveNumber);
    hist->add_option("--seed", hist_args.seed, "Master seed (default 0)");
    hist->add_option("--out", hist_args.out_path, "Output CSV path")->required();

    try {
        app.parse(argc, argv);
        detect_args.p_fa_given = pfa_opt->count() > 0;
        sim_args.trials_given = trials_opt->count() > 0;
        sim_args.seed_given = seed_opt->count() > 0;
        if (detect->parsed()) run_detect(detect_args);
        if (simulate->parsed()) run_simulate(sim_args);
        if (hist->parsed()) run_hist(hist_args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitArgument;
    } catch (const ccorder::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgument;
    } catch (const ccorder::ComputationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return 0;
}
