// SPDX-License-Identifier: Apache-2.0
//
// Covariances of the main-decoder input and the bounds built on them:
//   Sigma_r = I + rho Sigma_x,
//   Sigma_c = Sigma_x - rho Sigma_x (I + rho Sigma_x)^{-1} Sigma_x.
// Sigma_x plays the role of the one-step prediction error M_k and Sigma_c
// that of the filtering error P_k.

#pragma once

#include <array>
#include <functional>
#include <span>

#include <Eigen/Dense>

namespace sstkf {

/// Real symmetric matrix. Inputs are accepted when symmetric to a relative
/// 1e-9 and are then symmetrized exactly.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(Eigen::MatrixXd m);
    static SymMatrix identity(int n) { return SymMatrix(Eigen::MatrixXd::Identity(n, n)); }
    static SymMatrix zero(int n) { return SymMatrix(Eigen::MatrixXd::Zero(n, n)); }
    static SymMatrix from_2x2(double a11, double a12, double a22);

    int n() const { return static_cast<int>(m_.rows()); }
    double operator()(int i, int j) const { return m_(i, j); }
    const Eigen::MatrixXd& matrix() const { return m_; }

    double trace() const { return m_.trace(); }
    double determinant() const { return m_.determinant(); }
    /// Ascending.
    Eigen::VectorXd eigenvalues() const;
    bool is_psd(double tol = 1e-10) const;

private:
    Eigen::MatrixXd m_;
};

/// Diagonal 4 alpha_l (1 - alpha_l), off-diagonal 4 theta(i, j). `theta` is
/// n x n and only its off-diagonal part is read.
SymMatrix sigma_x_from_probs(std::span<const double> alpha, const Eigen::MatrixXd& theta);

SymMatrix sigma_x_2x2(double alpha1, double alpha2, double theta12);

/// I + rho Sigma_x with Sigma_x as above.
SymMatrix sigma_r(std::span<const double> alpha, const Eigen::MatrixXd& theta, double rho);

/// (Sigma_r - I) / rho. Throws std::invalid_argument unless rho > 0.
SymMatrix sigma_x_from_sigma_r(const SymMatrix& sr, double rho);

/// Via a Cholesky solve against I + rho Sigma_x. Throws std::invalid_argument
/// when that matrix is not positive definite.
SymMatrix sigma_c_general(const SymMatrix& sigma_x, double rho);

struct ClosedForm2x2 {
    SymMatrix sigma_c;
    double delta_x = 0.0;  // |Sigma_x|
    double delta_r = 0.0;  // |Sigma_r| = 1 + rho (s1 + s2 + rho delta_x)
};

/// Throws std::invalid_argument unless sigma_x is 2 x 2.
ClosedForm2x2 sigma_c_closed_2x2(const SymMatrix& sigma_x, double rho);

struct CovPair {
    double rho = 0.0;
    SymMatrix sigma_x;
    SymMatrix sigma_c;
    double delta_x = 0.0;
    double delta_r = 0.0;
};

CovPair make_cov_pair(const SymMatrix& sigma_x, double rho);

/// Eigenvalues of Sigma_c in the 2 x 2 case with their approximations
///   lambda~_{1,2} = tr(Sigma_c)/2 -/+ sigma_12 / Delta_r
/// (valid when sigma_1^2 ~ sigma_2^2), and central differences of
/// rho lambda_l in rho.
struct EigenTrack {
    std::array<double, 2> lambdas{};  // ascending
    double lambda_tilde1 = 0.0;
    double lambda_tilde2 = 0.0;
    double rho_lambda_tilde_max = 0.0;
    std::array<double, 2> d_rho_lambda{};
};

using SigmaXProvider = std::function<SymMatrix(double rho)>;

/// `provider` returns Sigma_x at a given rho; `rel_step` scales the
/// difference step with rho.
EigenTrack eigen_track(const SigmaXProvider& provider, double rho, double rel_step = 1e-4);

/// (1/2) log |I + rho Sigma_x|, via Cholesky.
double log_det_half(const SymMatrix& sigma_x, double rho);

/// (1/(2 rho)) log |I + rho Sigma_x|.
double mi_gauss_bound(const SymMatrix& sigma_x, double rho);

struct BoundChain {
    double half_tr_sigma_c = 0.0;
    double gauss_bound = 0.0;
    double half_tr_sigma_x = 0.0;
    double inv_1p_rho = 0.0;
    double log1p_rho_over_rho = 0.0;

    /// Strict ordering half_tr_sigma_c < gauss_bound < half_tr_sigma_x.
    bool strict_chain() const { return half_tr_sigma_c < gauss_bound && gauss_bound < half_tr_sigma_x; }
    bool outer_bounds() const { return half_tr_sigma_c <= inv_1p_rho && gauss_bound <= log1p_rho_over_rho; }
};

BoundChain bound_chain(const CovPair& pair);

/// Mutual information (nats) of a BPSK symbol at SNR rho:
///   I = rho - E[log cosh(rho - sqrt(rho) Y)], Y ~ N(0, 1),
/// by Gauss-Hermite quadrature. Throws std::invalid_argument for rho < 0.
double binary_input_mi(double rho);

/// Same integral by adaptive Simpson over y in [-10, 10].
double binary_input_mi_simpson(double rho, double tol = 1e-12);

/// Nodes and weights for the integral of exp(-x^2) f(x).
struct QuadratureRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};
QuadratureRule gauss_hermite(int n);

/// min(mi_gauss_bound, 2 I(rho) / rho) for a 2-symbol branch.
double mi_per_branch_bound(const CovPair& pair);

/// Quick-look-in analogue of Sigma_x built from beta and theta'.
SymMatrix sigma_x_prime(double beta1, double beta2, double theta12p);

}  // namespace sstkf
