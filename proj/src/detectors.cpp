#include "ccorder/detectors.hpp"
#include "ccorder/errors.hpp"
#include "ccorder/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace ccorder {

namespace {

constexpr double kLogFloor = 1e-15;  // substitute for 1 - k^2 when k has been clamped to 1

double log_one_minus_k2(double k) {
    return std::log(std::max(1.0 - k * k, kLogFloor));
}

void check_s_range(const CanonicalSpectrum& k, int s, int upper) {
    if (s < 0 || s > upper) {
        throw ArgumentError("s = " + std::to_string(s) + " outside [0, " +
                            std::to_string(upper) + "] for rank pair (" +
                            std::to_string(k.r_x) + ", " + std::to_string(k.r_y) + ")");
    }
}

// Threshold cache keyed by degrees of freedom; p_fa is fixed per scan.
class ThresholdCache {
public:
    explicit ThresholdCache(double p_fa) : p_fa_(p_fa) {}

    double at(int r_x, int r_y, int s) {
        const int dof = 2 * (r_x - s) * (r_y - s);
        auto it = cache_.find(dof);
        if (it == cache_.end()) {
            it = cache_.emplace(dof, chi2_quantile(1.0 - p_fa_, dof)).first;
        }
        return it->second;
    }

private:
    double p_fa_;
    std::unordered_map<int, double> cache_;
};

} // namespace

double glrt_lambda(const CanonicalSpectrum& k, int M, int s) {
    check_s_range(k, s, k.r() - 1);
    double sum = 0.0;
    for (int i = s; i < k.r(); ++i) {
        sum += log_one_minus_k2(k.k[i]);
    }
    return double(M) * sum;
}

double bartlett_lawley(const CanonicalSpectrum& k, int M, int s) {
    check_s_range(k, s, k.r() - 1);
    double correction = double(M) - double(s) - 0.5 * double(k.r_x + k.r_y + 1);
    for (int i = 0; i < s; ++i) {
        const double ki = k.k[i];
        if (ki == 0.0) {
            throw DegenerateStatisticError(
                "Bartlett-Lawley statistic needs k_" + std::to_string(i + 1) +
                " > 0 at rank pair (" + std::to_string(k.r_x) + ", " + std::to_string(k.r_y) + ")");
        }
        correction += 1.0 / (ki * ki);
    }
    if (!(correction > 0.0)) {
        throw SampleSizeError("nonpositive Bartlett correction factor at rank pair (" +
                              std::to_string(k.r_x) + ", " + std::to_string(k.r_y) +
                              "), s = " + std::to_string(s) + ", M = " + std::to_string(M));
    }
    double log_sum = 0.0;
    for (int i = s; i < k.r(); ++i) {
        log_sum += log_one_minus_k2(k.k[i]);
    }
    return -2.0 * correction * log_sum;
}

double ht_threshold(int r_x, int r_y, int s, double p_fa) {
    if (s < 0 || s >= std::min(r_x, r_y)) {
        throw ArgumentError("threshold requested at s = " + std::to_string(s) +
                            " outside [0, min(r_x, r_y))");
    }
    if (!(p_fa > 0.0 && p_fa < 1.0)) {
        throw ArgumentError("p_fa must lie in (0,1)");
    }
    return chi2_quantile(1.0 - p_fa, 2 * (r_x - s) * (r_y - s));
}

double mdl_ic(const CanonicalSpectrum& k, int M, int s) {
    check_s_range(k, s, k.r());
    double log_sum = 0.0;
    for (int i = 0; i < s; ++i) {
        log_sum += log_one_minus_k2(k.k[i]);
    }
    return double(M) * log_sum + std::log(double(M)) * double(s) * double(k.r_x + k.r_y - s);
}

double mdl_threshold(int r_x, int r_y, int s, int M) {
    if (s < 0 || s >= std::min(r_x, r_y)) {
        throw ArgumentError("MDL threshold requested at s = " + std::to_string(s) +
                            " outside [0, min(r_x, r_y))");
    }
    if (M < 2) {
        throw ArgumentError("MDL threshold needs M >= 2");
    }
    return -std::log(double(M)) * double(r_x - s) * double(r_y - s);
}

int min_step_ht(const CanonicalSpectrum& k, int M, double p_fa) {
    const int r = k.r();
    for (int s = 0; s < r; ++s) {
        if (bartlett_lawley(k, M, s) < ht_threshold(k.r_x, k.r_y, s, p_fa)) {
            return s;
        }
    }
    return r;
}

int min_step_mdl_threshold(const CanonicalSpectrum& k, int M) {
    const int r = k.r();
    for (int s = 0; s < r; ++s) {
        if (glrt_lambda(k, M, s) > mdl_threshold(k.r_x, k.r_y, s, M)) {
            return s;
        }
    }
    return r;
}

int min_step_mdl_ic(const CanonicalSpectrum& k, int M) {
    const int r = k.r();
    int best_s = 0;
    double best_val = 0.0;  // mdl_ic(k, M, 0) is identically zero
    double log_sum = 0.0;
    const double log_m = std::log(double(M));
    for (int s = 1; s <= r; ++s) {
        log_sum += log_one_minus_k2(k.k[s - 1]);
        const double val = double(M) * log_sum + log_m * double(s) * double(k.r_x + k.r_y - s);
        if (val < best_val) {
            best_val = val;
            best_s = s;
        }
    }
    return best_s;
}

namespace {

PairDiagnostic scan_pair(const CanonicalSpectrum& k, int M, DetectorMethod method,
                         ThresholdCache* thresholds) {
    PairDiagnostic diag;
    diag.r_x = k.r_x;
    diag.r_y = k.r_y;
    const int r = k.r();
    try {
        switch (method) {
            case DetectorMethod::MaxMinHT: {
                diag.min_step = r;
                for (int s = 0; s < r; ++s) {
                    const double c = bartlett_lawley(k, M, s);
                    const double t = thresholds->at(k.r_x, k.r_y, s);
                    diag.statistics.push_back(c);
                    diag.thresholds.push_back(t);
                    if (c < t) {
                        diag.min_step = s;
                        break;
                    }
                }
                break;
            }
            case DetectorMethod::MaxMinMdlThreshold: {
                diag.min_step = r;
                for (int s = 0; s < r; ++s) {
                    const double lam = glrt_lambda(k, M, s);
                    const double t = mdl_threshold(k.r_x, k.r_y, s, M);
                    diag.statistics.push_back(lam);
                    diag.thresholds.push_back(t);
                    if (lam > t) {
                        diag.min_step = s;
                        break;
                    }
                }
                break;
            }
            default: {  // MaxMinMdlIc; other methods rejected before the scan
                for (int s = 0; s <= r; ++s) {
                    diag.statistics.push_back(mdl_ic(k, M, s));
                }
                diag.min_step = min_step_mdl_ic(k, M);
                break;
            }
        }
    } catch (const ComputationError& e) {
        diag.skipped = true;
        diag.min_step = -1;
        diag.skip_reason = e.what();
    }
    return diag;
}

} // namespace

DetectorDecision detect(const SpectrumTable& table, const DetectorConfig& cfg) {
    if (cfg.method != DetectorMethod::MaxMinHT &&
        cfg.method != DetectorMethod::MaxMinMdlThreshold &&
        cfg.method != DetectorMethod::MaxMinMdlIc) {
        throw ArgumentError("detect() accepts only the max-min methods; "
                            "use traditional_series_test or full_dim_ic for baselines");
    }
    const int r_max = (cfg.r_max == 0) ? table.r_max() : cfg.r_max;
    if (r_max < 1 || r_max > table.r_max()) {
        throw ArgumentError("r_max = " + std::to_string(r_max) +
                            " outside the spectrum table bound " + std::to_string(table.r_max()));
    }

    // Family-wise false-alarm control: each scanned pair is tested at an
    // equal share of the requested p_fa.
    if (cfg.method == DetectorMethod::MaxMinHT && !(cfg.p_fa > 0.0 && cfg.p_fa < 1.0)) {
        throw ArgumentError("p_fa must lie in (0,1)");
    }
    ThresholdCache thresholds(cfg.p_fa / (double(r_max) * double(r_max)));

    DetectorDecision decision;
    decision.diagnostics.reserve(std::size_t(r_max) * std::size_t(r_max));
    int best = -1, best_rx = 0, best_ry = 0;
    for (int r_x = 1; r_x <= r_max; ++r_x) {
        for (int r_y = 1; r_y <= r_max; ++r_y) {
            PairDiagnostic diag = scan_pair(table.at(r_x, r_y), table.M(), cfg.method,
                                            &thresholds);
            if (!diag.skipped) {
                const int s = diag.min_step;
                const bool wins =
                    s > best || (s == best && (r_x + r_y < best_rx + best_ry ||
                                               (r_x + r_y == best_rx + best_ry && r_x < best_rx)));
                if (wins) {
                    best = s;
                    best_rx = r_x;
                    best_ry = r_y;
                }
            }
            decision.diagnostics.push_back(std::move(diag));
        }
    }
    if (best < 0) {
        throw ComputationError("every rank pair in the scan was degenerate");
    }
    decision.d_hat = best;
    decision.r_x_star = best_rx;
    decision.r_y_star = best_ry;
    return decision;
}

DetectorDecision detect(const DataMatrixPair& pair, const DetectorConfig& cfg) {
    pair.validate();
    const SvdCache cache = economy_svd(pair);
    const int bound = std::min(std::min(cache.n, cache.m), cache.M / 2);
    const int r_max = (cfg.r_max == 0) ? bound : cfg.r_max;
    if (r_max < 1 || r_max > bound) {
        throw ArgumentError("r_max = " + std::to_string(r_max) +
                            " outside [1, min(n, m, M/2)] = [1, " + std::to_string(bound) + "]");
    }
    SpectrumTable table(cache, r_max);
    DetectorConfig effective = cfg;
    effective.r_max = r_max;
    return detect(table, effective);
}

int traditional_series_test(const DataMatrixPair& pair, double p_fa) {
    if (!(p_fa > 0.0 && p_fa < 1.0)) {
        throw ArgumentError("p_fa must lie in (0,1)");
    }
    const CanonicalSpectrum spec = full_canonical_correlations(pair);
    const int p = spec.r();
    for (int s = 0; s < p; ++s) {
        if (bartlett_lawley(spec, pair.M(), s) < ht_threshold(spec.r_x, spec.r_y, s, p_fa)) {
            return s;
        }
    }
    return p;
}

int full_dim_ic(const DataMatrixPair& pair, IcPenalty penalty) {
    const CanonicalSpectrum spec = full_canonical_correlations(pair);
    const int p = spec.r();
    const int n_plus_m = spec.r_x + spec.r_y;
    const double M = double(pair.M());
    const double unit = (penalty == IcPenalty::Mdl) ? std::log(M) : 2.0;
    int best_s = 0;
    double best_val = 0.0;
    double log_sum = 0.0;
    for (int s = 1; s < p; ++s) {
        log_sum += log_one_minus_k2(spec.k[s - 1]);
        const double val = M * log_sum + unit * double(s) * double(n_plus_m - s);
        if (val < best_val) {
            best_val = val;
            best_s = s;
        }
    }
    return best_s;
}

} // namespace ccorder
