#pragma once

#include "ccorder/cca.hpp"

#include <string>
#include <vector>

namespace ccorder {

enum class DetectorMethod {
    MaxMinHT,            // rank scan + Bartlett-Lawley hypothesis test series
    MaxMinMdlThreshold,  // rank scan + GLRT against the MDL-derived threshold
    MaxMinMdlIc,         // rank scan + MDL information criterion minimization
    TraditionalHT,       // full-dimension hypothesis test series (baseline)
    FullDimMdl,          // full-dimension MDL criterion (baseline)
    FullDimAic,          // full-dimension AIC criterion (baseline)
};

struct DetectorConfig {
    DetectorMethod method = DetectorMethod::MaxMinMdlThreshold;
    double p_fa = 0.005;  // used by the hypothesis-test methods
    int r_max = 0;        // rank scan cap; 0 means the default min(n, m, M/2)
};

/// Per-(r_x, r_y) record of what the rank scan saw: the min-step result,
/// the statistic evaluated at each s, and the matching thresholds (empty for
/// the information criterion, which has no threshold).
struct PairDiagnostic {
    int r_x = 0;
    int r_y = 0;
    int min_step = -1;
    bool skipped = false;
    std::string skip_reason;
    std::vector<double> statistics;
    std::vector<double> thresholds;
};

struct DetectorDecision {
    int d_hat = 0;
    int r_x_star = 0;
    int r_y_star = 0;
    std::vector<PairDiagnostic> diagnostics;
};

/// GLRT statistic Lambda(r_x, r_y, s) = M * ln prod_{i=s+1}^{r} (1 - k_i^2).
/// Always <= 0; equals 0 exactly when the trailing correlations vanish.
/// @throws ArgumentError unless 0 <= s <= r-1.
double glrt_lambda(const CanonicalSpectrum& k, int M, int s);

/**
 * Bartlett-Lawley statistic
 *   C(r_x, r_y, s) = -2 (M - s - (r_x+r_y+1)/2 + sum_{i<=s} k_i^{-2})
 *                      * ln prod_{i=s+1}^{r} (1 - k_i^2),
 * approximately chi-square with 2(r_x-s)(r_y-s) degrees of freedom under the
 * hypothesis of exactly s correlated signals.
 *
 * @throws ArgumentError unless 0 <= s <= r-1.
 * @throws DegenerateStatisticError if some k_i = 0 for i <= s.
 * @throws SampleSizeError if the correction factor is not positive.
 */
double bartlett_lawley(const CanonicalSpectrum& k, int M, int s);

/// Test threshold T(r_x, r_y, s) = chi2_quantile(1 - p_fa, 2(r_x-s)(r_y-s)).
/// @throws ArgumentError unless s < min(r_x, r_y) and p_fa in (0,1).
double ht_threshold(int r_x, int r_y, int s, double p_fa);

/// MDL information criterion
///   I_MDL(r_x, r_y, s) = M * ln prod_{i<=s} (1 - k_i^2) + ln(M) s (r_x+r_y-s).
/// Defined for 0 <= s <= r, with I_MDL(0) = 0.
/// @throws ArgumentError outside that range.
double mdl_ic(const CanonicalSpectrum& k, int M, int s);

/// MDL-derived GLRT threshold T_MDL(r_x, r_y, s) = -ln(M) (r_x-s)(r_y-s).
/// @throws ArgumentError unless s < min(r_x, r_y) and M >= 2.
double mdl_threshold(int r_x, int r_y, int s, int M);

/// Smallest s whose Bartlett-Lawley statistic falls below the chi-square
/// threshold at p_fa; r if no s is accepted. Result in {0, ..., r}.
int min_step_ht(const CanonicalSpectrum& k, int M, double p_fa);

/// Smallest s whose GLRT statistic exceeds the MDL threshold; r if none
/// does. Result in {0, ..., r}.
int min_step_mdl_threshold(const CanonicalSpectrum& k, int M);

/**
 * Minimizer of the MDL information criterion over s = 0, ..., r (ties go to
 * the smaller s). The saturated endpoint s = r is included so the criterion
 * can express "every direction correlated"; this keeps the result ordered
 * at or above min_step_mdl_threshold on every spectrum, which the bounded
 * search s <= r-1 does not (the threshold variant can return r while an
 * argmin capped at r-1 cannot).
 */
int min_step_mdl_ic(const CanonicalSpectrum& k, int M);

/**
 * Joint estimate of (d, r_x, r_y): runs the configured min-step on every
 * rank pair (r_x, r_y) in [1, r_max]^2 and takes the maximum, with ties
 * broken toward the smallest r_x + r_y, then the smallest r_x.
 *
 * For the hypothesis-test method the requested p_fa is interpreted
 * family-wise: each of the r_max^2 scanned pairs is tested at
 * p_fa / r_max^2 (Bonferroni), so the chance of any false rejection across
 * the whole scan stays at or below p_fa. Without this the scan's false
 * alarms accumulate across pairs and a null scenario is flagged almost
 * surely once r_max is moderately large.
 *
 * Rank pairs whose statistic is degenerate are skipped and recorded in the
 * diagnostics rather than failing the whole scan.
 *
 * @throws ArgumentError for a baseline method (use traditional_series_test
 * or full_dim_ic) or an out-of-range r_max.
 * @throws ComputationError if every rank pair had to be skipped.
 */
DetectorDecision detect(const DataMatrixPair& pair, const DetectorConfig& cfg);

/// Same scan over an existing spectrum table (lets callers share the table
/// across several detector configurations on the same dataset).
DetectorDecision detect(const SpectrumTable& table, const DetectorConfig& cfg);

/**
 * Classical series of hypothesis tests at full dimension: smallest s with
 * C(n, m, s) below the chi-square threshold at 2(n-s)(m-s) degrees of
 * freedom, else p = min(n, m). Requires sample support well beyond n + m to
 * be reliable; with M < n + m the defective unit correlations keep every
 * statistic above threshold and the test saturates at p.
 */
int traditional_series_test(const DataMatrixPair& pair, double p_fa);

enum class IcPenalty { Mdl, Aic };

/// Full-dimension information criterion baseline: argmin over s = 0..p-1 of
/// M * ln prod_{i<=s}(1 - k_i^2) + penalty(s), with penalty ln(M) s (n+m-s)
/// for MDL and the conventional 2 s (n+m-s) for AIC.
int full_dim_ic(const DataMatrixPair& pair, IcPenalty penalty);

} // namespace ccorder
