#include "ccorder/datagen.hpp"
#include "ccorder/errors.hpp"

#include <Eigen/QR>

#include <cmath>
#include <string>

namespace ccorder {

namespace {

constexpr double kDegToRad = 0.017453292519943295;

// Stream tags inside one trial. The trial index is shifted left so distinct
// trials can never collide on a stream id.
enum StreamTag : std::uint64_t {
    kTagSignals = 0,
    kTagNoiseX = 1,
    kTagNoiseY = 2,
    kTagMixX = 3,
    kTagMixY = 4,
    kTagStride = 8,
};

} // namespace

void ScenarioConfig::validate() const {
    if (n < 1 || m < 1) {
        throw ArgumentError("channel dimensions must be at least 1");
    }
    if (M < 2) {
        throw ArgumentError("at least M = 2 sample pairs are required");
    }
    if (d < 0 || f_x < 0 || f_y < 0) {
        throw ArgumentError("signal counts must be nonnegative");
    }
    if (d + f_x > n || d + f_y > m) {
        throw ArgumentError("signal counts exceed channel dimensions: need d + f_x <= n and "
                            "d + f_y <= m");
    }
    if (int(sigma_x.size()) != d + f_x || int(sigma_y.size()) != d + f_y) {
        throw ArgumentError("sigma_x / sigma_y must list one standard deviation per signal "
                            "(lengths d + f_x and d + f_y)");
    }
    for (double s : sigma_x) {
        if (!(s > 0.0)) throw ArgumentError("all standard deviations must be positive");
    }
    for (double s : sigma_y) {
        if (!(s > 0.0)) throw ArgumentError("all standard deviations must be positive");
    }
    if (int(rho.size()) != d) {
        throw ArgumentError("rho must list one correlation coefficient per correlated pair");
    }
    for (double r : rho) {
        if (!(r >= -1.0 && r <= 1.0)) {
            throw ArgumentError("correlation coefficients must lie in [-1, 1]");
        }
    }
    if (mixing.kind == MixingKind::UlaSteering) {
        if (int(mixing.angles_x_deg.size()) != d + f_x ||
            int(mixing.angles_y_deg.size()) != d + f_y) {
            throw ArgumentError("steering mixing needs one arrival angle per signal "
                                "in each channel");
        }
    }
    switch (noise.kind) {
        case NoiseKind::White:
            if (!(noise.sigma2 > 0.0)) throw ArgumentError("white noise variance must be positive");
            break;
        case NoiseKind::SpatialMA:
            if (noise.coeffs.empty()) throw ArgumentError("MA noise needs filter coefficients");
            if (!(noise.sigma2_w > 0.0)) throw ArgumentError("MA driver variance must be positive");
            if (int(noise.coeffs.size()) > n || int(noise.coeffs.size()) > m) {
                throw ArgumentError("MA filter order exceeds a channel dimension");
            }
            break;
        case NoiseKind::SpatialAR1:
            if (!(noise.sigma2_w > 0.0)) {
                throw ArgumentError("AR(1) innovation variance must be positive");
            }
            if (!(std::abs(noise.a) < 1.0)) {
                throw ArgumentError("AR(1) coefficient must satisfy |a| < 1");
            }
            break;
    }
}

CMatrix random_unitary(int dim, RandomStream& rng) {
    if (dim < 1) {
        throw ArgumentError("random_unitary needs dim >= 1");
    }
    CMatrix Z(dim, dim);
    for (int col = 0; col < dim; ++col) {
        for (int row = 0; row < dim; ++row) {
            Z(row, col) = rng.cnormal();
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(Z);
    CMatrix Q = qr.householderQ();
    const CMatrix& QR = qr.matrixQR();
    for (int col = 0; col < dim; ++col) {
        const std::complex<double> diag = QR(col, col);
        const double mag = std::abs(diag);
        if (mag > 0.0) {
            Q.col(col) *= diag / mag;
        }
    }
    return Q;
}

CMatrix ula_steering(int dim, const std::vector<double>& angles_deg) {
    if (dim < 1) {
        throw ArgumentError("ula_steering needs dim >= 1");
    }
    CMatrix A(dim, Eigen::Index(angles_deg.size()));
    for (std::size_t i = 0; i < angles_deg.size(); ++i) {
        const double phase_step = 1.5707963267948966 * std::sin(angles_deg[i] * kDegToRad);
        for (int k = 0; k < dim; ++k) {
            A(k, Eigen::Index(i)) =
                std::complex<double>(std::cos(phase_step * k), std::sin(phase_step * k));
        }
    }
    return A;
}

std::pair<CMatrix, CMatrix> sample_signals(const ScenarioConfig& cfg, RandomStream& rng) {
    CMatrix Sx(cfg.d + cfg.f_x, cfg.M);
    CMatrix Sy(cfg.d + cfg.f_y, cfg.M);
    for (int t = 0; t < cfg.M; ++t) {
        for (int i = 0; i < cfg.d; ++i) {
            // 2x2 Cholesky of the pair covariance: y-component mixes the
            // shared factor u with an independent residual w.
            const std::complex<double> u = rng.cnormal();
            const std::complex<double> w = rng.cnormal();
            const double r = cfg.rho[std::size_t(i)];
            Sx(i, t) = cfg.sigma_x[std::size_t(i)] * u;
            Sy(i, t) = cfg.sigma_y[std::size_t(i)] * (r * u + std::sqrt(1.0 - r * r) * w);
        }
        for (int i = cfg.d; i < cfg.d + cfg.f_x; ++i) {
            Sx(i, t) = cfg.sigma_x[std::size_t(i)] * rng.cnormal();
        }
        for (int i = cfg.d; i < cfg.d + cfg.f_y; ++i) {
            Sy(i, t) = cfg.sigma_y[std::size_t(i)] * rng.cnormal();
        }
    }
    return {std::move(Sx), std::move(Sy)};
}

CMatrix sample_noise(const NoiseModel& model, int dim, int M, RandomStream& rng) {
    if (dim < 1 || M < 1) {
        throw ArgumentError("sample_noise needs dim >= 1 and M >= 1");
    }
    CMatrix N(dim, M);
    switch (model.kind) {
        case NoiseKind::White: {
            const double scale = std::sqrt(model.sigma2);
            for (int t = 0; t < M; ++t) {
                for (int k = 0; k < dim; ++k) {
                    N(k, t) = scale * rng.cnormal();
                }
            }
            break;
        }
        case NoiseKind::SpatialMA: {
            const int order = int(model.coeffs.size());
            if (order > dim) {
                throw ArgumentError("MA filter order " + std::to_string(order) +
                                    " exceeds channel dimension " + std::to_string(dim));
            }
            const double scale = std::sqrt(model.sigma2_w);
            CMatrix W(dim, M);
            for (int t = 0; t < M; ++t) {
                for (int k = 0; k < dim; ++k) {
                    W(k, t) = scale * rng.cnormal();
                }
            }
            for (int t = 0; t < M; ++t) {
                for (int k = 0; k < dim; ++k) {
                    std::complex<double> acc(0.0, 0.0);
                    for (int q = 0; q < order; ++q) {
                        acc += model.coeffs[std::size_t(q)] * W((k + q) % dim, t);
                    }
                    N(k, t) = acc;
                }
            }
            break;
        }
        case NoiseKind::SpatialAR1: {
            const double scale = std::sqrt(model.sigma2_w);
            const double init_scale = std::sqrt(model.sigma2_w / (1.0 - model.a * model.a));
            for (int t = 0; t < M; ++t) {
                N(0, t) = init_scale * rng.cnormal();
                for (int k = 1; k < dim; ++k) {
                    N(k, t) = model.a * N(k - 1, t) + scale * rng.cnormal();
                }
            }
            break;
        }
    }
    return N;
}

GeneratedDataset generate(const ScenarioConfig& cfg, std::uint64_t seed, std::uint64_t trial) {
    cfg.validate();
    const std::uint64_t base = trial * kTagStride;

    RandomStream rng_signals(seed, base + kTagSignals);
    auto [Sx, Sy] = sample_signals(cfg, rng_signals);

    CMatrix Ax, Ay;
    if (cfg.mixing.kind == MixingKind::RandomUnitary) {
        RandomStream rng_mix_x(seed, base + kTagMixX);
        RandomStream rng_mix_y(seed, base + kTagMixY);
        Ax = random_unitary(cfg.n, rng_mix_x).leftCols(cfg.d + cfg.f_x);
        Ay = random_unitary(cfg.m, rng_mix_y).leftCols(cfg.d + cfg.f_y);
    } else {
        Ax = ula_steering(cfg.n, cfg.mixing.angles_x_deg);
        Ay = ula_steering(cfg.m, cfg.mixing.angles_y_deg);
    }

    RandomStream rng_noise_x(seed, base + kTagNoiseX);
    RandomStream rng_noise_y(seed, base + kTagNoiseY);

    GeneratedDataset out;
    out.pair.X = Ax * Sx + sample_noise(cfg.noise, cfg.n, cfg.M, rng_noise_x);
    out.pair.Y = Ay * Sy + sample_noise(cfg.noise, cfg.m, cfg.M, rng_noise_y);
    out.truth.d = cfg.d;
    out.truth.f_x = cfg.f_x;
    out.truth.f_y = cfg.f_y;
    out.truth.rho = cfg.rho;
    return out;
}

} // namespace ccorder
