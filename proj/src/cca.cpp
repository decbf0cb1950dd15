#include "ccorder/cca.hpp"
#include "ccorder/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <string>

namespace ccorder {

namespace {

constexpr double kUnitSlack = 1e-9;       // reject k beyond 1 + this
constexpr double kCondLimit = 1e12;       // covariance condition ceiling
constexpr double kEigFloorRel = 1e-12;    // eigenvalue floor, relative to largest

RVector clamp_spectrum(const RVector& sv) {
    RVector k = sv;
    for (Eigen::Index i = 0; i < k.size(); ++i) {
        if (k[i] > 1.0 + kUnitSlack) {
            throw ComputationError("canonical correlation " + std::to_string(k[i]) +
                                   " exceeds 1 beyond numerical slack");
        }
        k[i] = std::min(std::max(k[i], 0.0), 1.0);
    }
    return k;
}

RVector singular_values(const CMatrix& A) {
    Eigen::BDCSVD<CMatrix> svd(A);
    if (svd.info() != Eigen::Success) {
        throw ComputationError("SVD failed to converge on a " + std::to_string(A.rows()) +
                               "x" + std::to_string(A.cols()) + " matrix");
    }
    return svd.singularValues();
}

// Inverse square root of a Hermitian positive definite sample covariance.
CMatrix inverse_sqrt(const CMatrix& R, const char* channel) {
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(R);
    if (eig.info() != Eigen::Success) {
        throw ComputationError(std::string("eigendecomposition failed for channel ") + channel);
    }
    const RVector& lam = eig.eigenvalues();  // ascending
    const double lam_max = lam[lam.size() - 1];
    const double lam_min = lam[0];
    if (!(lam_max > 0.0) || lam_min <= lam_max / kCondLimit) {
        throw SingularCovarianceError(std::string("sample covariance of channel ") + channel +
                                      " is numerically singular (condition beyond 1e12)");
    }
    const double floor = kEigFloorRel * lam_max;
    RVector inv_sqrt_lam(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        inv_sqrt_lam[i] = 1.0 / std::sqrt(std::max(lam[i], floor));
    }
    return eig.eigenvectors() * inv_sqrt_lam.asDiagonal() * eig.eigenvectors().adjoint();
}

} // namespace

void DataMatrixPair::validate() const {
    if (X.rows() < 1 || Y.rows() < 1) {
        throw ArgumentError("data matrices must have at least one row each");
    }
    if (X.cols() != Y.cols()) {
        throw ArgumentError("X and Y must have the same number of sample columns (got " +
                            std::to_string(X.cols()) + " and " + std::to_string(Y.cols()) + ")");
    }
    if (X.cols() < 2) {
        throw ArgumentError("at least M = 2 sample columns are required");
    }
    if (!X.allFinite() || !Y.allFinite()) {
        throw ArgumentError("data matrices contain non-finite entries");
    }
}

SvdCache economy_svd(const DataMatrixPair& pair) {
    pair.validate();
    SvdCache cache;
    cache.n = pair.n();
    cache.m = pair.m();
    cache.M = pair.M();

    Eigen::BDCSVD<CMatrix> svd_x(pair.X, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd_x.info() != Eigen::Success) {
        throw ComputationError("SVD failed to converge on X (" + std::to_string(cache.n) +
                               "x" + std::to_string(cache.M) + ")");
    }
    cache.U_x = svd_x.matrixU();
    cache.s_x = svd_x.singularValues();
    cache.V_x = svd_x.matrixV();

    Eigen::BDCSVD<CMatrix> svd_y(pair.Y, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd_y.info() != Eigen::Success) {
        throw ComputationError("SVD failed to converge on Y (" + std::to_string(cache.m) +
                               "x" + std::to_string(cache.M) + ")");
    }
    cache.U_y = svd_y.matrixU();
    cache.s_y = svd_y.singularValues();
    cache.V_y = svd_y.matrixV();
    return cache;
}

CanonicalSpectrum full_canonical_correlations(const DataMatrixPair& pair) {
    pair.validate();
    const double M = double(pair.M());
    const CMatrix Rxx = (pair.X * pair.X.adjoint()) / M;
    const CMatrix Ryy = (pair.Y * pair.Y.adjoint()) / M;
    const CMatrix Rxy = (pair.X * pair.Y.adjoint()) / M;

    const CMatrix Wx = inverse_sqrt(Rxx, "x");
    const CMatrix Wy = inverse_sqrt(Ryy, "y");
    const CMatrix coherence = Wx * Rxy * Wy;

    CanonicalSpectrum spec;
    spec.r_x = pair.n();
    spec.r_y = pair.m();
    spec.k = clamp_spectrum(singular_values(coherence));
    return spec;
}

DataMatrixPair pca_reduce(const DataMatrixPair& pair, const SvdCache& cache, int r_x, int r_y) {
    const int max_rx = std::min(cache.n, cache.M);
    const int max_ry = std::min(cache.m, cache.M);
    if (r_x < 1 || r_x > max_rx || r_y < 1 || r_y > max_ry) {
        throw ArgumentError("PCA ranks (" + std::to_string(r_x) + ", " + std::to_string(r_y) +
                            ") outside [1, min(dim, M)] = [1, " + std::to_string(max_rx) +
                            "] x [1, " + std::to_string(max_ry) + "]");
    }
    DataMatrixPair reduced;
    reduced.X = cache.U_x.leftCols(r_x).adjoint() * pair.X;
    reduced.Y = cache.U_y.leftCols(r_y).adjoint() * pair.Y;
    return reduced;
}

CanonicalSpectrum reduced_canonical_correlations(const SvdCache& cache, int r_x, int r_y) {
    const int p = std::min(cache.n, cache.m);
    if (r_x < 1 || r_y < 1 || std::max(r_x, r_y) > p || r_x + r_y > cache.M) {
        throw ArgumentError("rank pair (" + std::to_string(r_x) + ", " + std::to_string(r_y) +
                            ") violates r_x + r_y <= M = " + std::to_string(cache.M) +
                            " or max rank <= min(n,m) = " + std::to_string(p));
    }
    CanonicalSpectrum spec;
    spec.r_x = r_x;
    spec.r_y = r_y;
    spec.k = clamp_spectrum(
        singular_values(cache.V_x.leftCols(r_x).adjoint() * cache.V_y.leftCols(r_y)));
    return spec;
}

SpectrumTable::SpectrumTable(const SvdCache& cache, int r_max) : r_max_(r_max), M_(cache.M) {
    const int bound = std::min(std::min(cache.n, cache.m), cache.M / 2);
    if (r_max < 1 || r_max > bound) {
        throw ArgumentError("r_max = " + std::to_string(r_max) +
                            " outside [1, min(n, m, M/2)] = [1, " + std::to_string(bound) + "]");
    }
    const CMatrix G = cache.V_x.leftCols(r_max).adjoint() * cache.V_y.leftCols(r_max);
    entries_.reserve(std::size_t(r_max) * std::size_t(r_max));
    for (int r_x = 1; r_x <= r_max; ++r_x) {
        for (int r_y = 1; r_y <= r_max; ++r_y) {
            CanonicalSpectrum spec;
            spec.r_x = r_x;
            spec.r_y = r_y;
            spec.k = clamp_spectrum(singular_values(G.topLeftCorner(r_x, r_y)));
            entries_.push_back(std::move(spec));
        }
    }
}

const CanonicalSpectrum& SpectrumTable::at(int r_x, int r_y) const {
    if (r_x < 1 || r_x > r_max_ || r_y < 1 || r_y > r_max_) {
        throw ArgumentError("spectrum table lookup (" + std::to_string(r_x) + ", " +
                            std::to_string(r_y) + ") outside table bounds r_max = " +
                            std::to_string(r_max_));
    }
    return entries_[std::size_t(r_x - 1) * std::size_t(r_max_) + std::size_t(r_y - 1)];
}

} // namespace ccorder
