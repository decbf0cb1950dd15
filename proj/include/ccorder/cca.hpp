#pragma once

#include <Eigen/Dense>

#include <vector>

namespace ccorder {

using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// Two jointly sampled data matrices: X is n x M, Y is m x M, one column per
/// sample pair.
struct DataMatrixPair {
    CMatrix X;
    CMatrix Y;

    int n() const { return int(X.rows()); }
    int m() const { return int(Y.rows()); }
    int M() const { return int(X.cols()); }

    /// @throws ArgumentError if column counts differ, M < 2, a channel is
    /// empty, or any entry is non-finite.
    void validate() const;
};

/// Economy-size SVDs of both data matrices: X = U_x diag(s_x) V_x^H with
/// U_x n x r, V_x M x r, r = min(n, M), and the same for Y. Downstream code
/// only ever consumes the right singular vectors and the leading triplets,
/// so the economy form is stored rather than full square factors.
struct SvdCache {
    int n = 0, m = 0, M = 0;
    CMatrix U_x, V_x;
    RVector s_x;
    CMatrix U_y, V_y;
    RVector s_y;
};

/// Sample canonical correlations of one PCA rank pair: k holds
/// min(r_x, r_y) values, sorted descending, clamped into [0, 1].
struct CanonicalSpectrum {
    int r_x = 0;
    int r_y = 0;
    RVector k;

    int r() const { return int(std::min(r_x, r_y)); }
};

/// Compute and cache the economy SVDs of both channels.
/// @throws ComputationError if the SVD fails to converge.
SvdCache economy_svd(const DataMatrixPair& pair);

/**
 * Canonical correlations at full dimension, via the singular values of the
 * coherence matrix R_xx^{-1/2} R_xy R_yy^{-1/2} built from sample
 * covariances R_xx = X X^H / M etc.
 *
 * @throws SingularCovarianceError if either sample covariance has condition
 * number beyond 1e12; the message names the offending channel.
 */
CanonicalSpectrum full_canonical_correlations(const DataMatrixPair& pair);

/**
 * Rank-reduced PCA descriptions: X_r = U_x(:,1:r_x)^H X and the analogous
 * reduction of Y. Row variances of each output are non-increasing.
 *
 * @throws ArgumentError unless 1 <= r_x <= min(n,M) and 1 <= r_y <= min(m,M).
 */
DataMatrixPair pca_reduce(const DataMatrixPair& pair, const SvdCache& cache, int r_x, int r_y);

/**
 * Canonical correlations after PCA rank reduction, computed directly as the
 * singular values of V_x(:,1:r_x)^H V_y(:,1:r_y).
 *
 * The rank guard r_x + r_y <= M keeps the spectrum free of defective unit
 * correlations; max(r_x, r_y) <= min(n, m) keeps both reductions proper.
 *
 * @throws ArgumentError on rank guard violation.
 */
CanonicalSpectrum reduced_canonical_correlations(const SvdCache& cache, int r_x, int r_y);

/**
 * All reduced spectra for 1 <= r_x, r_y <= r_max, computed from a single
 * r_max x r_max Gram product G = V_x^H V_y whose leading submatrices feed
 * one small SVD per pair.
 */
class SpectrumTable {
public:
    /// @throws ArgumentError unless 1 <= r_max <= min(n, m, floor(M/2)).
    SpectrumTable(const SvdCache& cache, int r_max);

    int r_max() const { return r_max_; }
    int M() const { return M_; }

    const CanonicalSpectrum& at(int r_x, int r_y) const;

private:
    int r_max_ = 0;
    int M_ = 0;
    std::vector<CanonicalSpectrum> entries_;
};

} // namespace ccorder
