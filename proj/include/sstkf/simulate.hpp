// SPDX-License-Identifier: Apache-2.0
//
// End-to-end Monte Carlo of the SST decoder over the AWGN channel: channel
// error rate, decoded error rate, empirical main-decoder error probabilities
// and the empirical covariance of the main-decoder soft input.

#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "sstkf/convcode.hpp"
#include "sstkf/parity_prob.hpp"

namespace sstkf {

struct SimulationOptions {
    DecoderMode mode = DecoderMode::General;
    double ebn0_db = 0.0;
    std::uint64_t branches = 100000;
    std::uint64_t seed = 1;
    int truncation = 0;  // <= 0 selects default_truncation
    /// Branches per batch for batch-means standard errors.
    int batch = 1024;
};

struct SimulationResult {
    double ebn0_db = 0.0;
    std::uint64_t branches = 0;
    Estimate pre_ber;   // hard decisions of the pre-decoder output
    Estimate post_ber;  // SST decoder output
    Estimate alpha1;    // P(v^(1) = 1)
    Estimate alpha2;
    Estimate alpha11;   // P(v^(1) = 1, v^(2) = 1)
    Eigen::Matrix2d sigma_r = Eigen::Matrix2d::Zero();
    Eigen::Matrix2d sigma_r_se = Eigen::Matrix2d::Zero();
};

/// Runs in independent segments of up to 65536 counted branches, each
/// seeded from (seed, segment index) and preceded by a discarded warm-up so
/// every counted branch sees a full error history. v is recovered as the
/// main-decoder hard input XOR the channel error it carries. Standard errors
/// come from batch means. Throws std::invalid_argument for fewer than 1000
/// branches or a non-positive batch.
SimulationResult simulate(const ConvCode& code, const SimulationOptions& options);

}  // namespace sstkf
