// SPDX-License-Identifier: Apache-2.0
//
// BPSK over AWGN: z = c x + w with x = +1 for bit 0, -1 for bit 1, w ~ N(0, 1)
// and c = sqrt(rho), rho = 2 Es/N0.

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "sstkf/convcode.hpp"

namespace sstkf {

/// Upper tail of the standard normal distribution.
double q_function(double x);

struct SnrPoint {
    double ebn0_db = 0.0;
    double rate = 0.5;
    double rho = 0.0;
    double c = 0.0;
    double epsilon = 0.5;
};

/// Throws std::invalid_argument unless rate is in (0, 1].
SnrPoint snr_point(double ebn0_db, double rate = 0.5);

/// Fixed grid -10..10 dB in 1 dB steps.
std::vector<double> default_db_grid();

struct ReceivedBlock {
    std::array<double, 2> z{};
    BitPair z_hard{};
};

using ReceivedBlocks = std::vector<ReceivedBlock>;

/// Bit 1 iff z < 0; zero maps to bit 0.
inline std::uint8_t hard_decision(double z) { return z < 0.0 ? 1 : 0; }

/// Reproducible generator: mt19937_64 seeded through splitmix64 so that
/// (seed, stream) pairs give independent-looking streams. Uniforms take the
/// top 53 bits; normals use the Box-Muller transform. Every step is fixed by
/// the C++ standard or by this file, so output is identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    /// Uniform on [0, 1).
    double uniform();
    /// Uniform on (0, 1].
    double uniform_open0() { return 1.0 - uniform(); }
    double normal();
    bool bernoulli(double p) { return uniform() < p; }
    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic in `seed`.
ReceivedBlocks transmit(const BitPairs& bits, const SnrPoint& point, std::uint64_t seed);

/// Same mapping with caller-supplied noise, one pair per branch.
ReceivedBlocks transmit_with_noise(const BitPairs& bits, const SnrPoint& point,
                                   const std::vector<std::array<double, 2>>& noise);

}  // namespace sstkf
