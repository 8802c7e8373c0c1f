// SPDX-License-Identifier: Apache-2.0
//
// Brute-force references for the filter: the joint Gaussian law of
// (x_0..x_N, z_0..z_N) is assembled explicitly and conditioned directly.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sstkf/channel.hpp"
#include "sstkf/kalman.hpp"

namespace sstkf {

struct GaussianEstimate {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;
};

class JointGaussianOracle {
public:
    /// Covers steps 0..last.
    JointGaussianOracle(const StateSpaceModel& model, int last);

    /// Law of x_k given z_0..z_b; b = -1 gives the prior. `z` must hold at
    /// least b + 1 observations.
    GaussianEstimate condition(int k, int b, const std::vector<Eigen::VectorXd>& z) const;

    /// E[x_k (z_0..z_b)^T]-based error covariance only.
    Eigen::MatrixXd error_cov(int k, int b) const;

    /// 1/2 log(|Z_k| / prod_j |W_j|), Z_k the stacked covariance of z_0..z_k.
    double mutual_information(int k) const;

    Eigen::MatrixXd state_cov(int i, int j) const;

private:
    Eigen::MatrixXd obs_cov(int b) const;
    Eigen::MatrixXd state_obs_cov(int k, int b) const;

    const StateSpaceModel& model_;
    int last_;
    std::vector<Eigen::VectorXd> means_;
    std::vector<Eigen::MatrixXd> cov_;  // (last+1)^2 blocks of Cov(x_i, x_j)
};

/// Random time-varying model with `steps` distinct step matrices. F is
/// kept well away from singular; W >= 0.3 I; X0 >= 0.1 I.
StateSpaceModel random_model(Rng& rng, int n, int m, int steps);

/// Draws x_0..x_N and z_0..z_N from the model.
struct Realization {
    std::vector<Eigen::VectorXd> x;
    std::vector<Eigen::VectorXd> z;
};
Realization simulate_model(const StateSpaceModel& model, int last, Rng& rng);

struct IdentityCheck {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass() const { return max_deviation <= tolerance; }
};

/// Runs every filter, information and smoother identity on one random model
/// with `states` states, `obs` observations per step and steps 0..steps-1.
/// Loewner-order checks report the most negative eigenvalue gap as a
/// deviation (zero when the order holds).
std::vector<IdentityCheck> kalman_check(std::uint64_t seed, int states, int obs, int steps);

}  // namespace sstkf
