#pragma once

#include "ccorder/datagen.hpp"
#include "ccorder/detectors.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ccorder {

/// Which scenario field a sweep varies. None means a single run of the base
/// scenario.
enum class SweepField {
    None,
    Samples,              // M
    Dimension,            // n = m
    IndependentVariance,  // variance of every independent signal, both channels
    MeanRho,              // mean correlation; each rho_i is redrawn per trial
                          // uniformly within +-rho_halfwidth of the swept value
    AngularSpacing,       // ULA spacing: angle i becomes first_angle + i * value
};

struct SweepSpec {
    SweepField field = SweepField::None;
    std::vector<double> values;   // strictly increasing
    double rho_halfwidth = 0.05;  // MeanRho only
};

struct ExperimentSpec {
    ScenarioConfig scenario;
    SweepSpec sweep;
    std::vector<DetectorConfig> detectors;
    int trials = 1;
    std::uint64_t seed = 0;

    /// @throws ArgumentError on any violated invariant.
    void validate() const;
};

/// One (sweep value, detector) aggregate. p_d counts exact matches d_hat = d
/// over all trials (errored trials count in the denominator and are reported
/// separately). The mode columns give the most frequent d_hat and selected
/// rank pair; the full empirical distributions ride along for callers that
/// want more than the mode.
struct CellReport {
    double sweep_value = 0.0;
    std::string detector;
    double p_d = 0.0;
    int trials = 0;
    int err_trials = 0;
    int d_hat_mode = 0;
    int rx_mode = 0;
    int ry_mode = 0;
    std::map<int, int> d_hat_counts;
    std::map<std::pair<int, int>, int> rank_pair_counts;
};

struct MonteCarloReport {
    std::vector<CellReport> cells;
};

/// Raw samples of one Bartlett-Lawley statistic across trials, with the
/// chi-square degrees of freedom and threshold that annotate it.
struct HistogramReport {
    std::vector<std::pair<int, double>> samples;  // (trial index, statistic)
    int err_trials = 0;
    int dof = 0;
    double p_fa = 0.01;
    double threshold = 0.0;
};

/// Stable text label for a detector configuration, used as the CSV key
/// (e.g. "ht@0.005", "mdl_threshold", "mdl_ic", "traditional@0.01",
/// "full_mdl", "full_aic").
std::string detector_label(const DetectorConfig& cfg);

/**
 * Run the Monte Carlo experiment: for every sweep value and every trial,
 * generate a fresh dataset and evaluate every configured detector on it.
 *
 * Trials run concurrently (thread count from the CCORDER_THREADS environment
 * variable, default hardware concurrency); each trial is a pure function of
 * (spec, trial index), and results are reduced in a fixed order, so the
 * report is byte-for-byte identical for any thread count. Per-trial detector
 * failures are counted in err_trials, never silently dropped; configuration
 * errors abort the run.
 */
MonteCarloReport run_experiment(const ExperimentSpec& spec);

/**
 * Sample the statistic C(r_x, r_y, s) across independent trials of one
 * scenario. Trials whose statistic is degenerate are excluded and counted.
 * The report carries the chi-square DOF 2(r_x-s)(r_y-s) and the threshold at
 * p_fa = 0.01 for annotation.
 */
HistogramReport run_statistic_histogram(const ScenarioConfig& scenario, int r_x, int r_y, int s,
                                        int trials, std::uint64_t seed);

/// Write a detection report as CSV with columns
/// sweep_value, detector, p_d, trials, err_trials, d_hat_mode, rx_mode, ry_mode.
/// @throws ArgumentError on I/O failure, naming the path.
void emit_csv(const MonteCarloReport& report, const std::string& path);

/// Write histogram samples as CSV with columns trial, statistic.
void emit_csv(const HistogramReport& hist, const std::string& path);

/// Parse a detection-report CSV back into the eight emitted columns (the
/// in-memory distributions are not serialized and come back empty).
MonteCarloReport parse_report_csv(const std::string& path);

} // namespace ccorder
