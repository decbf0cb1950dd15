#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace ccorder {

/**
 * Counter-based pseudo-random generator (Philox-style 4x32, 10 rounds).
 *
 * Output blocks are a pure function of (key, counter), so any number of
 * logical streams can be split off a single 64-bit seed without coordination:
 * a stream is identified by the two high counter words, and blocks within a
 * stream by the two low words. This is what makes Monte Carlo trials
 * reproducible independently of thread scheduling.
 */
struct Philox4x32 {
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::uint32_t k0, std::uint32_t k1,
                                              std::array<std::uint32_t, 4> c) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = std::uint64_t(kMul0) * c[0];
            const std::uint64_t p1 = std::uint64_t(kMul1) * c[2];
            const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
            const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
            c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        return c;
    }
};

/**
 * Sequential view over one logical stream of the counter-based generator.
 *
 * Constructed from (seed, stream id); consecutive draws walk the block
 * counter. Two streams with different ids are statistically independent,
 * and a stream's output depends only on (seed, stream, draw index).
 */
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream)
        : k0_(std::uint32_t(seed)), k1_(std::uint32_t(seed >> 32)),
          s0_(std::uint32_t(stream)), s1_(std::uint32_t(stream >> 32)) {}

    std::uint32_t next_u32() {
        if (have_ == 0) {
            buf_ = Philox4x32::block(k0_, k1_,
                                     {std::uint32_t(n_), std::uint32_t(n_ >> 32), s0_, s1_});
            ++n_;
            have_ = 4;
        }
        return buf_[4 - have_--];
    }

    /// Uniform on [0, 1) with 53 random bits.
    double next_double() {
        const std::uint64_t hi = next_u32();
        const std::uint64_t lo = next_u32();
        return double(((hi << 32) | lo) >> 11) * 0x1.0p-53;
    }

    /// Standard real normal via Box-Muller; draws are paired internally.
    double normal() {
        if (have_normal_) {
            have_normal_ = false;
            return spare_normal_;
        }
        double z0, z1;
        box_muller(z0, z1);
        spare_normal_ = z1;
        have_normal_ = true;
        return z0;
    }

    /// Circularly symmetric complex normal with E|z|^2 = 1
    /// (real and imaginary parts each have variance 1/2).
    std::complex<double> cnormal() {
        double z0, z1;
        box_muller(z0, z1);
        return {z0 * kInvSqrt2, z1 * kInvSqrt2};
    }

private:
    static constexpr double kInvSqrt2 = 0.7071067811865475244;
    static constexpr double kTwoPi = 6.283185307179586476925;

    void box_muller(double& z0, double& z1) {
        // u1 in (0,1] so the log is finite; u2 in [0,1).
        const double u1 = (double(next_u32()) + 1.0) * 0x1.0p-32;
        const double u2 = double(next_u32()) * 0x1.0p-32;
        const double radius = std::sqrt(-2.0 * std::log(u1));
        z0 = radius * std::cos(kTwoPi * u2);
        z1 = radius * std::sin(kTwoPi * u2);
    }

    std::uint32_t k0_, k1_, s0_, s1_;
    std::uint64_t n_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int have_ = 0;
    double spare_normal_ = 0.0;
    bool have_normal_ = false;
};

} // namespace ccorder
