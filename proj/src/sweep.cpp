// SPDX-License-Identifier: Apache-2.0

#include "sstkf/sweep.hpp"

#include <cmath>

namespace sstkf {

CodeAnalysis::CodeAnalysis(const ConvCode& code, DecoderMode mode)
    : supports_(code_supports(code, mode)), mode_(mode), rate_(code.rate()) {}

SymMatrix CodeAnalysis::sigma_x(double eps) const {
    const ParityPoint p = parity_point(supports_, eps);
    return sigma_x_2x2(p.alpha1, p.alpha2, p.theta12);
}

SweepRow CodeAnalysis::row(double ebn0_db, EpsilonCoupling coupling) const {
    const SnrPoint snr = snr_point(ebn0_db, rate_);
    SweepRow r;
    r.ebn0_db = ebn0_db;
    r.rho = snr.rho;
    r.probs = parity_point(supports_, snr.epsilon);
    const SymMatrix sx = sigma_x_2x2(r.probs.alpha1, r.probs.alpha2, r.probs.theta12);
    const CovPair pair = make_cov_pair(sx, snr.rho);
    const BoundChain chain = bound_chain(pair);
    r.sigma1_sq = sx(0, 0);
    r.sigma2_sq = sx(1, 1);
    r.half_tr_sigma_x = chain.half_tr_sigma_x;
    r.half_tr_sigma_c = chain.half_tr_sigma_c;
    r.rho_half_tr_sigma_c = snr.rho * chain.half_tr_sigma_c;
    r.gauss_bound = chain.gauss_bound;
    r.inv_1p_rho = chain.inv_1p_rho;
    r.log1p_rho_over_rho = chain.log1p_rho_over_rho;
    r.two_I_over_rho = 2.0 * binary_input_mi(snr.rho) / snr.rho;

    const double eps = snr.epsilon;
    SigmaXProvider provider;
    if (coupling == EpsilonCoupling::Fixed) {
        provider = [this, eps](double) { return sigma_x(eps); };
    } else {
        provider = [this](double rho) { return sigma_x(q_function(std::sqrt(rho))); };
    }
    r.eigen = eigen_track(provider, snr.rho);
    r.rho_lambda_tilde1 = snr.rho * r.eigen.lambda_tilde1;
    return r;
}

std::vector<SweepRow> CodeAnalysis::sweep(const std::vector<double>& grid_db, EpsilonCoupling coupling) const {
    std::vector<SweepRow> rows;
    rows.reserve(grid_db.size());
    for (double db : grid_db) rows.push_back(row(db, coupling));
    return rows;
}

}  // namespace sstkf
