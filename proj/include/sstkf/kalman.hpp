// SPDX-License-Identifier: Apache-2.0
//
// Discrete-time linear minimum-variance filter
//   x_{k+1} = F_k x_k + u_k,   z_k = H_k x_k + w_k
// with its innovations, the Gaussian mutual information I[x^k; z^k] and the
// fixed-interval smoother written in terms of cross covariances P(k, l).

#pragma once

#include <vector>

#include <Eigen/Dense>

namespace sstkf {

/// Per-step system matrices.
struct StepMatrices {
    Eigen::MatrixXd F;  // n x n, nonsingular
    Eigen::MatrixXd H;  // m x n
    Eigen::MatrixXd U;  // n x n, PSD
    Eigen::MatrixXd W;  // m x m, PD
};

/// Immutable model. Step k uses steps[min(k, size-1)], so a single entry
/// describes a time-invariant system.
class StateSpaceModel {
public:
    StateSpaceModel(std::vector<StepMatrices> steps, Eigen::VectorXd x0_mean, Eigen::MatrixXd X0);
    StateSpaceModel(StepMatrices constant, Eigen::VectorXd x0_mean, Eigen::MatrixXd X0);

    int n() const { return n_; }
    int m() const { return m_; }
    const StepMatrices& at(int k) const;
    const Eigen::MatrixXd& F(int k) const { return at(k).F; }
    const Eigen::MatrixXd& H(int k) const { return at(k).H; }
    const Eigen::MatrixXd& U(int k) const { return at(k).U; }
    const Eigen::MatrixXd& W(int k) const { return at(k).W; }
    const Eigen::VectorXd& x0_mean() const { return x0_mean_; }
    const Eigen::MatrixXd& X0() const { return X0_; }

private:
    std::vector<StepMatrices> steps_;
    Eigen::VectorXd x0_mean_;
    Eigen::MatrixXd X0_;
    int n_ = 0;
    int m_ = 0;
};

struct FilterState {
    int k = 0;
    Eigen::VectorXd xhat_pred;   // x_{k|k-1}
    Eigen::VectorXd xhat_filt;   // x_{k|k}
    Eigen::MatrixXd M;           // prediction error covariance
    Eigen::MatrixXd P;           // filtering error covariance
    Eigen::MatrixXd R;           // innovation covariance W + H M H^T
    Eigen::MatrixXd K;           // M H^T R^{-1}
    Eigen::VectorXd innovation;  // z - H x_{k|k-1}
};

/// How M_{k+1} and x_{k+1|k} are formed from step k: predict from P_k
/// (F P F^T + U), or directly as F (M - K R K^T) F^T + U.
enum class Recursion { TwoStep, Combined };

/// One measurement update. With no previous state the prediction is the
/// prior (x0_mean, X0); otherwise it is propagated from `prev`.
FilterState kf_step(const FilterState* prev, const StateSpaceModel& model, const Eigen::VectorXd& z,
                    Recursion recursion = Recursion::TwoStep);

using FilterTrace = std::vector<FilterState>;

/// Runs kf_step over z_0, ..., z_{N-1}.
FilterTrace run_filter(const StateSpaceModel& model, const std::vector<Eigen::VectorXd>& z,
                       Recursion recursion = Recursion::TwoStep);

/// Covariance-only trace through step k (observations set to zero).
FilterTrace run_filter_covariances(const StateSpaceModel& model, int k);

/// 1/2 sum_{j<=k} log(|R_j| / |W_j|).
double gaussian_mi(const StateSpaceModel& model, const FilterTrace& trace, int k);

/// 1/2 sum_{j<=k} log(|M_j| / |P_j|). Needs every M_j nonsingular.
double gaussian_mi_cov_form(const FilterTrace& trace, int k);

/// P(k, l) = E[(x_k - x_{k|k})(x_l - x_{l|l-1})^T] for l > k.
Eigen::MatrixXd cross_cov(const StateSpaceModel& model, const FilterTrace& trace, int k, int l);

/// Sigma_{k|b}. b = k gives P_k. Throws std::invalid_argument for k > b or
/// std::out_of_range when the trace does not reach b.
Eigen::MatrixXd smoother_cov(const StateSpaceModel& model, const FilterTrace& trace, int k, int b);

/// x_{k|b} = x_{k|k} + sum_{l=k+1}^{b} P(k, l) H_l^T R_l^{-1} nu_l.
Eigen::VectorXd smoothed_estimate(const StateSpaceModel& model, const FilterTrace& trace, int k, int b);

/// Largest absolute entry of
///   (A^{-1} + C^T B^{-1} C)^{-1} - (A - A C^T (C A C^T + B)^{-1} C A)
/// for A (n x n) and B (m x m) positive definite and C m x n.
double inversion_lemma_deviation(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, const Eigen::MatrixXd& C);

/// Smallest eigenvalue of the symmetric part of b - a, i.e. a <= b in the
/// Loewner order iff the result is >= -tol.
double loewner_gap(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace sstkf
