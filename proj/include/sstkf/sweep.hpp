// SPDX-License-Identifier: Apache-2.0
//
// Per-SNR evaluation of the analytic pipeline: epsilon -> alpha/theta ->
// Sigma_x -> Sigma_c -> traces, eigenvalue approximations and bounds.

#pragma once

#include <array>
#include <vector>

#include "sstkf/channel.hpp"
#include "sstkf/convcode.hpp"
#include "sstkf/covar_mi.hpp"
#include "sstkf/parity_prob.hpp"

namespace sstkf {

/// How Sigma_x follows rho when differentiating rho lambda.
enum class EpsilonCoupling {
    Fixed,    // eps frozen at the grid point
    Channel,  // eps = Q(sqrt(rho))
};

struct SweepRow {
    double ebn0_db = 0.0;
    double rho = 0.0;
    ParityPoint probs;  // alpha/theta, or beta/theta' in QLI mode
    double sigma1_sq = 0.0;
    double sigma2_sq = 0.0;
    double half_tr_sigma_x = 0.0;
    double half_tr_sigma_c = 0.0;
    double rho_half_tr_sigma_c = 0.0;
    double gauss_bound = 0.0;
    double inv_1p_rho = 0.0;
    double log1p_rho_over_rho = 0.0;
    double two_I_over_rho = 0.0;
    EigenTrack eigen;
    double rho_lambda_tilde1 = 0.0;
};

class CodeAnalysis {
public:
    CodeAnalysis(const ConvCode& code, DecoderMode mode);

    const std::array<ErrorSupport, 2>& supports() const { return supports_; }
    DecoderMode mode() const { return mode_; }

    SymMatrix sigma_x(double eps) const;
    SweepRow row(double ebn0_db, EpsilonCoupling coupling = EpsilonCoupling::Fixed) const;
    std::vector<SweepRow> sweep(const std::vector<double>& grid_db,
                                EpsilonCoupling coupling = EpsilonCoupling::Fixed) const;

private:
    std::array<ErrorSupport, 2> supports_;
    DecoderMode mode_;
    double rate_ = 0.5;
};

}  // namespace sstkf
