#include "ccorder/harness.hpp"
#include "ccorder/errors.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

namespace ccorder {

namespace {

constexpr std::uint64_t kTagRho = 5;     // per-trial correlation jitter stream
constexpr std::uint64_t kTagStride = 8;  // must match the stride in datagen

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

int thread_count() {
    if (const char* env = std::getenv("CCORDER_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? int(hw) : 1;
}

int to_int_checked(double value, const char* what) {
    const double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-9 || rounded < -2e9 || rounded > 2e9) {
        throw ArgumentError(std::string(what) + " sweep values must be integers (got " +
                            format_double(value) + ")");
    }
    return int(rounded);
}

// Scenario for one sweep point (before per-trial adjustments).
ScenarioConfig scenario_at(const ScenarioConfig& base, SweepField field, double value) {
    ScenarioConfig cfg = base;
    switch (field) {
        case SweepField::None:
            break;
        case SweepField::Samples:
            cfg.M = to_int_checked(value, "samples");
            break;
        case SweepField::Dimension:
            cfg.n = cfg.m = to_int_checked(value, "dimension");
            break;
        case SweepField::IndependentVariance: {
            if (!(value > 0.0)) {
                throw ArgumentError("independent-variance sweep values must be positive");
            }
            const double sigma = std::sqrt(value);
            for (std::size_t i = std::size_t(cfg.d); i < cfg.sigma_x.size(); ++i) {
                cfg.sigma_x[i] = sigma;
            }
            for (std::size_t i = std::size_t(cfg.d); i < cfg.sigma_y.size(); ++i) {
                cfg.sigma_y[i] = sigma;
            }
            break;
        }
        case SweepField::MeanRho:
            // The swept value is applied per trial (with jitter); fill the
            // mean here so validation sees in-range coefficients.
            std::fill(cfg.rho.begin(), cfg.rho.end(), std::clamp(value, -1.0, 1.0));
            break;
        case SweepField::AngularSpacing: {
            if (cfg.mixing.kind != MixingKind::UlaSteering) {
                throw ArgumentError("angular-spacing sweep requires steering-array mixing");
            }
            if (cfg.mixing.angles_x_deg.empty() || cfg.mixing.angles_y_deg.empty()) {
                throw ArgumentError("angular-spacing sweep needs at least one base angle "
                                    "per channel");
            }
            const double first_x = cfg.mixing.angles_x_deg.front();
            const double first_y = cfg.mixing.angles_y_deg.front();
            for (std::size_t i = 0; i < cfg.mixing.angles_x_deg.size(); ++i) {
                cfg.mixing.angles_x_deg[i] = first_x + double(i) * value;
            }
            for (std::size_t i = 0; i < cfg.mixing.angles_y_deg.size(); ++i) {
                cfg.mixing.angles_y_deg[i] = first_y + double(i) * value;
            }
            break;
        }
    }
    cfg.validate();
    return cfg;
}

struct TrialOutcome {
    int d_hat = -1;
    int rx = 0;
    int ry = 0;
    bool err = false;
};

bool is_max_min(DetectorMethod method) {
    return method == DetectorMethod::MaxMinHT || method == DetectorMethod::MaxMinMdlThreshold ||
           method == DetectorMethod::MaxMinMdlIc;
}

// Run every configured detector on one freshly generated dataset.
void run_trial(const ScenarioConfig& point_cfg, const ExperimentSpec& spec,
               std::uint64_t global_trial, std::vector<TrialOutcome>& out) {
    ScenarioConfig cfg = point_cfg;
    if (spec.sweep.field == SweepField::MeanRho) {
        RandomStream jitter(spec.seed, global_trial * kTagStride + kTagRho);
        const double hw = spec.sweep.rho_halfwidth;
        for (double& r : cfg.rho) {
            r = std::clamp(r + (jitter.next_double() * 2.0 - 1.0) * hw, -1.0, 1.0);
        }
    }

    GeneratedDataset data;
    try {
        data = generate(cfg, spec.seed, global_trial);
    } catch (const ComputationError&) {
        for (auto& slot : out) slot.err = true;
        return;
    }

    // Shared spectrum table for every max-min detector on this dataset.
    const int bound = std::min(std::min(cfg.n, cfg.m), cfg.M / 2);
    bool need_table = false;
    int table_rmax = 0;
    for (const DetectorConfig& det : spec.detectors) {
        if (is_max_min(det.method)) {
            const int r_max = det.r_max == 0 ? bound : det.r_max;
            if (r_max < 1 || r_max > bound) {
                throw ArgumentError("detector r_max = " + std::to_string(det.r_max) +
                                    " outside [1, min(n, m, M/2)] = [1, " +
                                    std::to_string(bound) + "]");
            }
            need_table = true;
            table_rmax = std::max(table_rmax, r_max);
        }
    }

    SvdCache cache;
    std::unique_ptr<SpectrumTable> table;
    if (need_table) {
        try {
            cache = economy_svd(data.pair);
            table = std::make_unique<SpectrumTable>(cache, table_rmax);
        } catch (const ComputationError&) {
            for (std::size_t i = 0; i < spec.detectors.size(); ++i) {
                if (is_max_min(spec.detectors[i].method)) out[i].err = true;
            }
            table.reset();
        }
    }

    for (std::size_t i = 0; i < spec.detectors.size(); ++i) {
        const DetectorConfig& det = spec.detectors[i];
        if (out[i].err) continue;
        try {
            if (is_max_min(det.method)) {
                if (!table) {
                    out[i].err = true;
                    continue;
                }
                DetectorConfig effective = det;
                if (effective.r_max == 0) effective.r_max = bound;
                const DetectorDecision decision = detect(*table, effective);
                out[i].d_hat = decision.d_hat;
                out[i].rx = decision.r_x_star;
                out[i].ry = decision.r_y_star;
            } else if (det.method == DetectorMethod::TraditionalHT) {
                out[i].d_hat = traditional_series_test(data.pair, det.p_fa);
                out[i].rx = cfg.n;
                out[i].ry = cfg.m;
            } else {
                const IcPenalty penalty =
                    det.method == DetectorMethod::FullDimMdl ? IcPenalty::Mdl : IcPenalty::Aic;
                out[i].d_hat = full_dim_ic(data.pair, penalty);
                out[i].rx = cfg.n;
                out[i].ry = cfg.m;
            }
        } catch (const ComputationError&) {
            out[i].err = true;
        }
    }
}

// Run `count` trials with worker threads; slots[t] receives trial t's
// outcomes. Deterministic because slots are indexed, not appended.
template <typename TrialFn>
void parallel_trials(int count, TrialFn&& fn) {
    const int workers = std::min(thread_count(), std::max(count, 1));
    if (workers <= 1) {
        for (int t = 0; t < count; ++t) fn(t);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const int t = next.fetch_add(1);
                if (t >= count) return;
                {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (first_error) return;
                }
                try {
                    fn(t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace

void ExperimentSpec::validate() const {
    scenario.validate();
    if (trials < 1) {
        throw ArgumentError("at least one trial is required");
    }
    if (detectors.empty()) {
        throw ArgumentError("at least one detector must be configured");
    }
    if (sweep.field == SweepField::None && !sweep.values.empty()) {
        throw ArgumentError("sweep values given without a sweep field");
    }
    for (std::size_t i = 1; i < sweep.values.size(); ++i) {
        if (!(sweep.values[i] > sweep.values[i - 1])) {
            throw ArgumentError("sweep values must be strictly increasing");
        }
    }
    if (sweep.field == SweepField::MeanRho && !(sweep.rho_halfwidth >= 0.0)) {
        throw ArgumentError("rho half-width must be nonnegative");
    }
}

std::string detector_label(const DetectorConfig& cfg) {
    switch (cfg.method) {
        case DetectorMethod::MaxMinHT:
            return "ht@" + format_double(cfg.p_fa);
        case DetectorMethod::MaxMinMdlThreshold:
            return "mdl_threshold";
        case DetectorMethod::MaxMinMdlIc:
            return "mdl_ic";
        case DetectorMethod::TraditionalHT:
            return "traditional@" + format_double(cfg.p_fa);
        case DetectorMethod::FullDimMdl:
            return "full_mdl";
        case DetectorMethod::FullDimAic:
            return "full_aic";
    }
    return "unknown";
}

MonteCarloReport run_experiment(const ExperimentSpec& spec) {
    spec.validate();

    // A None sweep runs the base scenario once, keyed by its sample count.
    std::vector<double> points;
    if (spec.sweep.field == SweepField::None) {
        points.push_back(double(spec.scenario.M));
    } else {
        points = spec.sweep.values;
    }

    MonteCarloReport report;
    for (std::size_t pi = 0; pi < points.size(); ++pi) {
        const double value = points[pi];
        const ScenarioConfig point_cfg = scenario_at(spec.scenario, spec.sweep.field, value);

        std::vector<std::vector<TrialOutcome>> slots(
            std::size_t(spec.trials), std::vector<TrialOutcome>(spec.detectors.size()));
        parallel_trials(spec.trials, [&](int t) {
            const std::uint64_t global_trial = std::uint64_t(pi) * std::uint64_t(spec.trials) +
                                               std::uint64_t(t);
            run_trial(point_cfg, spec, global_trial, slots[std::size_t(t)]);
        });

        for (std::size_t di = 0; di < spec.detectors.size(); ++di) {
            CellReport cell;
            cell.sweep_value = value;
            cell.detector = detector_label(spec.detectors[di]);
            cell.trials = spec.trials;
            int hits = 0;
            for (int t = 0; t < spec.trials; ++t) {
                const TrialOutcome& outcome = slots[std::size_t(t)][di];
                if (outcome.err) {
                    ++cell.err_trials;
                    continue;
                }
                ++cell.d_hat_counts[outcome.d_hat];
                ++cell.rank_pair_counts[{outcome.rx, outcome.ry}];
                if (outcome.d_hat == point_cfg.d) ++hits;
            }
            cell.p_d = double(hits) / double(spec.trials);
            if (!cell.d_hat_counts.empty()) {
                int best_count = -1;
                for (const auto& [value_d, count] : cell.d_hat_counts) {
                    if (count > best_count) {  // map order breaks ties toward smaller d
                        best_count = count;
                        cell.d_hat_mode = value_d;
                    }
                }
            }
            if (!cell.rank_pair_counts.empty()) {
                int best_count = -1;
                for (const auto& [ranks, count] : cell.rank_pair_counts) {
                    const bool wins =
                        count > best_count ||
                        (count == best_count &&
                         (ranks.first + ranks.second < cell.rx_mode + cell.ry_mode ||
                          (ranks.first + ranks.second == cell.rx_mode + cell.ry_mode &&
                           ranks.first < cell.rx_mode)));
                    if (wins) {
                        best_count = count;
                        cell.rx_mode = ranks.first;
                        cell.ry_mode = ranks.second;
                    }
                }
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

HistogramReport run_statistic_histogram(const ScenarioConfig& scenario, int r_x, int r_y, int s,
                                        int trials, std::uint64_t seed) {
    scenario.validate();
    if (trials < 1) {
        throw ArgumentError("at least one trial is required");
    }
    if (s < 0 || s >= std::min(r_x, r_y)) {
        throw ArgumentError("s must lie in [0, min(r_x, r_y))");
    }

    HistogramReport report;
    report.dof = 2 * (r_x - s) * (r_y - s);
    report.p_fa = 0.01;
    report.threshold = ht_threshold(r_x, r_y, s, report.p_fa);

    std::vector<double> stats(std::size_t(trials),
                              std::numeric_limits<double>::quiet_NaN());
    std::vector<char> errs(std::size_t(trials), 0);
    parallel_trials(trials, [&](int t) {
        try {
            const GeneratedDataset data = generate(scenario, seed, std::uint64_t(t));
            const SvdCache cache = economy_svd(data.pair);
            const CanonicalSpectrum spec = reduced_canonical_correlations(cache, r_x, r_y);
            stats[std::size_t(t)] = bartlett_lawley(spec, scenario.M, s);
        } catch (const ComputationError&) {
            errs[std::size_t(t)] = 1;
        }
    });

    for (int t = 0; t < trials; ++t) {
        if (errs[std::size_t(t)]) {
            ++report.err_trials;
        } else {
            report.samples.emplace_back(t, stats[std::size_t(t)]);
        }
    }
    return report;
}

void emit_csv(const MonteCarloReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ArgumentError("cannot open CSV output file: " + path);
    }
    out << "sweep_value,detector,p_d,trials,err_trials,d_hat_mode,rx_mode,ry_mode\n";
    for (const CellReport& cell : report.cells) {
        out << format_double(cell.sweep_value) << ',' << cell.detector << ','
            << format_double(cell.p_d) << ',' << cell.trials << ',' << cell.err_trials << ','
            << cell.d_hat_mode << ',' << cell.rx_mode << ',' << cell.ry_mode << '\n';
    }
    if (!out.good()) {
        throw ArgumentError("error while writing CSV output file: " + path);
    }
}

void emit_csv(const HistogramReport& hist, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ArgumentError("cannot open CSV output file: " + path);
    }
    out << "trial,statistic\n";
    for (const auto& [trial, statistic] : hist.samples) {
        out << trial << ',' << format_double(statistic) << '\n';
    }
    if (!out.good()) {
        throw ArgumentError("error while writing CSV output file: " + path);
    }
}

MonteCarloReport parse_report_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ArgumentError("cannot open CSV file: " + path);
    }
    std::string line;
    if (!std::getline(in, line) ||
        line != "sweep_value,detector,p_d,trials,err_trials,d_hat_mode,rx_mode,ry_mode") {
        throw ArgumentError("unrecognized CSV header in " + path);
    }
    MonteCarloReport report;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 8) {
            throw ArgumentError("malformed CSV row in " + path + ": " + line);
        }
        CellReport cell;
        cell.sweep_value = std::stod(fields[0]);
        cell.detector = fields[1];
        cell.p_d = std::stod(fields[2]);
        cell.trials = std::stoi(fields[3]);
        cell.err_trials = std::stoi(fields[4]);
        cell.d_hat_mode = std::stoi(fields[5]);
        cell.rx_mode = std::stoi(fields[6]);
        cell.ry_mode = std::stoi(fields[7]);
        report.cells.push_back(std::move(cell));
    }
    return report;
}

} // namespace ccorder
