#pragma once

#include "ccorder/cca.hpp"
#include "ccorder/rng.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ccorder {

enum class MixingKind { RandomUnitary, UlaSteering };

/// How signals are mixed into the observation space. RandomUnitary draws a
/// fresh Haar-distributed unitary basis; UlaSteering builds deterministic
/// uniform-linear-array steering columns from fixed arrival angles
/// (half-wavelength sensor spacing).
struct MixingModel {
    MixingKind kind = MixingKind::RandomUnitary;
    std::vector<double> angles_x_deg;  // one arrival angle per x-channel signal
    std::vector<double> angles_y_deg;  // one arrival angle per y-channel signal
};

enum class NoiseKind { White, SpatialMA, SpatialAR1 };

/// Additive noise: white, or spatially colored along the component index by
/// a moving-average filter (driver index wraps around so every component
/// keeps the same variance) or a first-order autoregression with stationary
/// initialization.
struct NoiseModel {
    NoiseKind kind = NoiseKind::White;
    double sigma2 = 1.0;           // White: per-component variance
    std::vector<double> coeffs;    // SpatialMA: filter coefficients
    double sigma2_w = 1.0;         // SpatialMA / SpatialAR1: driver variance
    double a = 0.0;                // SpatialAR1: regression coefficient, |a| < 1
};

/**
 * Full description of a synthetic two-channel scenario: d correlated signal
 * pairs (pair i has correlation coefficient rho[i]), f_x and f_y additional
 * independent signals per channel, per-signal standard deviations, a mixing
 * model and a noise model. The population canonical correlations of the
 * noiseless model are |rho_i|.
 */
struct ScenarioConfig {
    int n = 1, m = 1;        // channel dimensions
    int M = 2;               // sample pairs
    int d = 0;               // correlated signal pairs
    int f_x = 0, f_y = 0;    // independent signals per channel
    std::vector<double> sigma_x;  // length d + f_x, standard deviations
    std::vector<double> sigma_y;  // length d + f_y
    std::vector<double> rho;      // length d, values in [-1, 1]
    MixingModel mixing;
    NoiseModel noise;

    /// @throws ArgumentError on any violated invariant.
    void validate() const;
};

struct GeneratedTruth {
    int d = 0, f_x = 0, f_y = 0;
    std::vector<double> rho;
};

struct GeneratedDataset {
    DataMatrixPair pair;
    GeneratedTruth truth;
};

/// Haar-distributed random unitary matrix: QR of a complex Gaussian matrix
/// with the phases of R's diagonal absorbed into Q.
CMatrix random_unitary(int dim, RandomStream& rng);

/// Steering matrix of a uniform linear array with half-wavelength spacing:
/// column i has entries exp(j (pi/2) k sin(theta_i)), k = 0..dim-1.
CMatrix ula_steering(int dim, const std::vector<double>& angles_deg);

/// Draw the signal matrices S_x ((d+f_x) x M) and S_y ((d+f_y) x M).
/// Correlated pair i is built from a shared circular Gaussian factor via the
/// 2x2 Cholesky of its covariance; all other components are independent.
std::pair<CMatrix, CMatrix> sample_signals(const ScenarioConfig& cfg, RandomStream& rng);

/// Draw one noise matrix (dim x M) from the given model.
/// @throws ArgumentError if dim is smaller than the MA filter order.
CMatrix sample_noise(const NoiseModel& model, int dim, int M, RandomStream& rng);

/**
 * Generate one dataset: X = A_x S_x + N_x, Y = A_y S_y + N_y.
 *
 * All randomness derives from (seed, trial) through fixed stream tags
 * (signals, noise per channel, mixing per channel), so a given (config,
 * seed, trial) triple produces the identical dataset on any platform and
 * any thread schedule. Random mixing bases are redrawn per call; steering
 * matrices are a deterministic function of the configured angles.
 */
GeneratedDataset generate(const ScenarioConfig& cfg, std::uint64_t seed, std::uint64_t trial = 0);

} // namespace ccorder
