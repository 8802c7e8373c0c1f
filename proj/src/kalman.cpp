// SPDX-License-Identifier: Apache-2.0

#include "sstkf/kalman.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sstkf {

namespace {

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& m) { return 0.5 * (m + m.transpose()); }

bool is_psd(const Eigen::MatrixXd& m, double tol) {
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(symmetrize(m), Eigen::EigenvaluesOnly).eigenvalues().minCoeff() >=
           -tol;
}

void validate_step(const StepMatrices& s, int n, int m, std::size_t index) {
    const std::string at = " (step " + std::to_string(index) + ")";
    if (s.F.rows() != n || s.F.cols() != n) throw std::invalid_argument("F must be n x n" + at);
    if (s.H.rows() != m || s.H.cols() != n) throw std::invalid_argument("H must be m x n" + at);
    if (s.U.rows() != n || s.U.cols() != n) throw std::invalid_argument("U must be n x n" + at);
    if (s.W.rows() != m || s.W.cols() != m) throw std::invalid_argument("W must be m x m" + at);
    if (Eigen::FullPivLU<Eigen::MatrixXd>(s.F).rank() < n) throw std::invalid_argument("F is singular" + at);
    if (!is_psd(s.U, 1e-12)) throw std::invalid_argument("U is not positive semi-definite" + at);
    if (Eigen::LLT<Eigen::MatrixXd>(symmetrize(s.W)).info() != Eigen::Success) {
        throw std::invalid_argument("W is not positive definite" + at);
    }
}

double log_det_pd(const Eigen::MatrixXd& m) {
    const Eigen::LLT<Eigen::MatrixXd> llt(symmetrize(m));
    if (llt.info() != Eigen::Success) throw std::domain_error("matrix is not positive definite");
    return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

const FilterState& state_at(const FilterTrace& trace, int k) {
    if (k < 0 || static_cast<std::size_t>(k) >= trace.size()) throw std::out_of_range("filter trace does not reach step");
    return trace[static_cast<std::size_t>(k)];
}

}  // namespace

StateSpaceModel::StateSpaceModel(std::vector<StepMatrices> steps, Eigen::VectorXd x0_mean, Eigen::MatrixXd X0)
    : steps_(std::move(steps)), x0_mean_(std::move(x0_mean)), X0_(std::move(X0)) {
    if (steps_.empty()) throw std::invalid_argument("model needs at least one step");
    n_ = static_cast<int>(steps_.front().F.rows());
    m_ = static_cast<int>(steps_.front().H.rows());
    if (n_ == 0 || m_ == 0) throw std::invalid_argument("model dimensions must be positive");
    for (std::size_t i = 0; i < steps_.size(); ++i) validate_step(steps_[i], n_, m_, i);
    if (x0_mean_.size() != n_) throw std::invalid_argument("x0 mean must have n entries");
    if (X0_.rows() != n_ || X0_.cols() != n_ || !is_psd(X0_, 1e-12)) {
        throw std::invalid_argument("X0 must be an n x n positive semi-definite matrix");
    }
    X0_ = symmetrize(X0_);
}

StateSpaceModel::StateSpaceModel(StepMatrices constant, Eigen::VectorXd x0_mean, Eigen::MatrixXd X0)
    : StateSpaceModel(std::vector<StepMatrices>{std::move(constant)}, std::move(x0_mean), std::move(X0)) {}

const StepMatrices& StateSpaceModel::at(int k) const {
    if (k < 0) throw std::out_of_range("negative step index");
    return steps_[std::min(static_cast<std::size_t>(k), steps_.size() - 1)];
}

FilterState kf_step(const FilterState* prev, const StateSpaceModel& model, const Eigen::VectorXd& z,
                    Recursion recursion) {
    FilterState s;
    if (prev == nullptr) {
        s.k = 0;
        s.xhat_pred = model.x0_mean();
        s.M = model.X0();
    } else {
        s.k = prev->k + 1;
        const Eigen::MatrixXd& F = model.F(prev->k);
        const Eigen::MatrixXd& U = model.U(prev->k);
        if (recursion == Recursion::TwoStep) {
            s.xhat_pred = F * prev->xhat_filt;
            s.M = symmetrize(F * prev->P * F.transpose() + U);
        } else {
            s.xhat_pred = F * (prev->xhat_pred + prev->K * prev->innovation);
            s.M = symmetrize(F * (prev->M - prev->K * prev->R * prev->K.transpose()) * F.transpose() + U);
        }
    }
    if (z.size() != model.m()) throw std::invalid_argument("observation must have m entries");
    const Eigen::MatrixXd& H = model.H(s.k);
    s.R = symmetrize(model.W(s.k) + H * s.M * H.transpose());
    const Eigen::LDLT<Eigen::MatrixXd> r_fact(s.R);
    if (r_fact.info() != Eigen::Success) throw std::domain_error("innovation covariance is singular");
    s.K = r_fact.solve(H * s.M).transpose();
    s.innovation = z - H * s.xhat_pred;
    s.xhat_filt = s.xhat_pred + s.K * s.innovation;
    s.P = symmetrize(s.M - s.K * s.R * s.K.transpose());
    return s;
}

FilterTrace run_filter(const StateSpaceModel& model, const std::vector<Eigen::VectorXd>& z, Recursion recursion) {
    FilterTrace trace;
    trace.reserve(z.size());
    for (const auto& zk : z) trace.push_back(kf_step(trace.empty() ? nullptr : &trace.back(), model, zk, recursion));
    return trace;
}

FilterTrace run_filter_covariances(const StateSpaceModel& model, int k) {
    if (k < 0) throw std::invalid_argument("step index must be nonnegative");
    return run_filter(model, std::vector<Eigen::VectorXd>(static_cast<std::size_t>(k) + 1, Eigen::VectorXd::Zero(model.m())));
}

double gaussian_mi(const StateSpaceModel& model, const FilterTrace& trace, int k) {
    double sum = 0.0;
    for (int j = 0; j <= k; ++j) sum += log_det_pd(state_at(trace, j).R) - log_det_pd(model.W(j));
    return 0.5 * sum;
}

double gaussian_mi_cov_form(const FilterTrace& trace, int k) {
    double sum = 0.0;
    for (int j = 0; j <= k; ++j) {
        const FilterState& s = state_at(trace, j);
        sum += log_det_pd(s.M) - log_det_pd(s.P);
    }
    return 0.5 * sum;
}

Eigen::MatrixXd cross_cov(const StateSpaceModel& model, const FilterTrace& trace, int k, int l) {
    if (l <= k) throw std::invalid_argument("cross_cov needs l > k");
    state_at(trace, l);
    Eigen::MatrixXd p = state_at(trace, k).P * model.F(k).transpose();
    const auto n = model.n();
    for (int j = k + 1; j < l; ++j) {
        const FilterState& s = trace[static_cast<std::size_t>(j)];
        p = p * (Eigen::MatrixXd::Identity(n, n) - s.K * model.H(j)).transpose() * model.F(j).transpose();
    }
    return p;
}

Eigen::MatrixXd smoother_cov(const StateSpaceModel& model, const FilterTrace& trace, int k, int b) {
    if (k > b) throw std::invalid_argument("smoother needs k <= b");
    state_at(trace, b);
    Eigen::MatrixXd sigma = state_at(trace, k).P;
    if (b == k) return sigma;
    const auto n = model.n();
    Eigen::MatrixXd p = sigma * model.F(k).transpose();
    for (int l = k + 1; l <= b; ++l) {
        const FilterState& s = trace[static_cast<std::size_t>(l)];
        const Eigen::MatrixXd ph = p * model.H(l).transpose();
        sigma -= ph * s.R.ldlt().solve(ph.transpose());
        if (l < b) p = p * (Eigen::MatrixXd::Identity(n, n) - s.K * model.H(l)).transpose() * model.F(l).transpose();
    }
    return symmetrize(sigma);
}

Eigen::VectorXd smoothed_estimate(const StateSpaceModel& model, const FilterTrace& trace, int k, int b) {
    if (k > b) throw std::invalid_argument("smoother needs k <= b");
    state_at(trace, b);
    Eigen::VectorXd x = state_at(trace, k).xhat_filt;
    if (b == k) return x;
    const auto n = model.n();
    Eigen::MatrixXd p = state_at(trace, k).P * model.F(k).transpose();
    for (int l = k + 1; l <= b; ++l) {
        const FilterState& s = trace[static_cast<std::size_t>(l)];
        x += p * model.H(l).transpose() * s.R.ldlt().solve(s.innovation);
        if (l < b) p = p * (Eigen::MatrixXd::Identity(n, n) - s.K * model.H(l)).transpose() * model.F(l).transpose();
    }
    return x;
}

double inversion_lemma_deviation(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, const Eigen::MatrixXd& C) {
    if (A.rows() != A.cols() || B.rows() != B.cols() || C.rows() != B.rows() || C.cols() != A.rows()) {
        throw std::invalid_argument("inversion lemma: A n x n, B m x m, C m x n");
    }
    const Eigen::MatrixXd lhs = (A.inverse() + C.transpose() * B.ldlt().solve(C)).inverse();
    const Eigen::MatrixXd rhs = A - A * C.transpose() * (C * A * C.transpose() + B).ldlt().solve(C * A);
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

double loewner_gap(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(symmetrize(b - a), Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
}

}  // namespace sstkf
