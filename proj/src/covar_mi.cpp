// SPDX-License-Identifier: Apache-2.0

#include "sstkf/covar_mi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sstkf {

namespace {

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& m) { return 0.5 * (m + m.transpose()); }

void check_rho(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be positive and finite");
}

// log cosh without overflow.
double log_cosh(double x) {
    const double a = std::abs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

double mi_integrand(double rho, double y) {
    const double phi = std::exp(-0.5 * y * y) / std::sqrt(2.0 * std::numbers::pi);
    return phi * log_cosh(rho - std::sqrt(rho) * y);
}

double simpson_step(double rho, double a, double b, double fa, double fm, double fb, double whole, double tol,
                    int depth) {
    const double m = 0.5 * (a + b);
    const double flm = mi_integrand(rho, 0.5 * (a + m));
    const double frm = mi_integrand(rho, 0.5 * (m + b));
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_step(rho, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(rho, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

constexpr int kHermiteNodes = 160;

}  // namespace

SymMatrix::SymMatrix(Eigen::MatrixXd m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("symmetric matrix must be square");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) throw std::invalid_argument("matrix is not symmetric");
    m_ = symmetrized(m);
}

SymMatrix SymMatrix::from_2x2(double a11, double a12, double a22) {
    Eigen::MatrixXd m(2, 2);
    m << a11, a12, a12, a22;
    return SymMatrix(std::move(m));
}

Eigen::VectorXd SymMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

bool SymMatrix::is_psd(double tol) const { return n() == 0 || eigenvalues().minCoeff() >= -tol; }

SymMatrix sigma_x_from_probs(std::span<const double> alpha, const Eigen::MatrixXd& theta) {
    const int n = static_cast<int>(alpha.size());
    if (theta.rows() != n || theta.cols() != n) throw std::invalid_argument("theta must be n x n");
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
        if (!(alpha[i] >= 0.0 && alpha[i] <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
        for (int j = 0; j < n; ++j) m(i, j) = i == j ? 4.0 * alpha[i] * (1.0 - alpha[i]) : 4.0 * theta(i, j);
    }
    return SymMatrix(std::move(m));
}

SymMatrix sigma_x_2x2(double alpha1, double alpha2, double theta12) {
    const std::array<double, 2> a{alpha1, alpha2};
    Eigen::MatrixXd t(2, 2);
    t << 0.0, theta12, theta12, 0.0;
    return sigma_x_from_probs(a, t);
}

SymMatrix sigma_r(std::span<const double> alpha, const Eigen::MatrixXd& theta, double rho) {
    if (rho < 0.0) throw std::invalid_argument("rho must be nonnegative");
    const SymMatrix sx = sigma_x_from_probs(alpha, theta);
    return SymMatrix(Eigen::MatrixXd::Identity(sx.n(), sx.n()) + rho * sx.matrix());
}

SymMatrix sigma_x_from_sigma_r(const SymMatrix& sr, double rho) {
    check_rho(rho);
    return SymMatrix((sr.matrix() - Eigen::MatrixXd::Identity(sr.n(), sr.n())) / rho);
}

SymMatrix sigma_c_general(const SymMatrix& sigma_x, double rho) {
    if (rho < 0.0) throw std::invalid_argument("rho must be nonnegative");
    const int n = sigma_x.n();
    const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n) + rho * sigma_x.matrix();
    const Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success) throw std::invalid_argument("I + rho Sigma_x is not positive definite");
    const Eigen::MatrixXd solved = llt.solve(sigma_x.matrix());
    return SymMatrix(symmetrized(sigma_x.matrix() - rho * sigma_x.matrix() * solved));
}

ClosedForm2x2 sigma_c_closed_2x2(const SymMatrix& sigma_x, double rho) {
    if (sigma_x.n() != 2) throw std::invalid_argument("closed form needs a 2 x 2 matrix");
    const double s1 = sigma_x(0, 0), s2 = sigma_x(1, 1), s12 = sigma_x(0, 1);
    const double dx = s1 * s2 - s12 * s12;
    const double dr = 1.0 + rho * (s1 + s2 + rho * dx);
    return {SymMatrix::from_2x2((s1 + rho * dx) / dr, s12 / dr, (s2 + rho * dx) / dr), dx, dr};
}

CovPair make_cov_pair(const SymMatrix& sigma_x, double rho) {
    CovPair p;
    p.rho = rho;
    p.sigma_x = sigma_x;
    if (sigma_x.n() == 2) {
        auto closed = sigma_c_closed_2x2(sigma_x, rho);
        p.sigma_c = std::move(closed.sigma_c);
        p.delta_x = closed.delta_x;
        p.delta_r = closed.delta_r;
    } else {
        p.sigma_c = sigma_c_general(sigma_x, rho);
        p.delta_x = sigma_x.determinant();
        p.delta_r = (Eigen::MatrixXd::Identity(sigma_x.n(), sigma_x.n()) + rho * sigma_x.matrix()).determinant();
    }
    return p;
}

EigenTrack eigen_track(const SigmaXProvider& provider, double rho, double rel_step) {
    check_rho(rho);
    if (!(rel_step > 0.0 && rel_step < 0.5)) throw std::invalid_argument("relative step must lie in (0, 0.5)");
    auto exact = [&](double r) {
        const ClosedForm2x2 c = sigma_c_closed_2x2(provider(r), r);
        const Eigen::VectorXd ev = c.sigma_c.eigenvalues();
        return std::array<double, 2>{ev(0), ev(1)};
    };
    EigenTrack t;
    const SymMatrix sx = provider(rho);
    const ClosedForm2x2 c = sigma_c_closed_2x2(sx, rho);
    const double half_tr = 0.5 * c.sigma_c.trace();
    const double offset = sx(0, 1) / c.delta_r;
    t.lambdas = exact(rho);
    t.lambda_tilde1 = half_tr - offset;
    t.lambda_tilde2 = half_tr + offset;
    t.rho_lambda_tilde_max = rho * std::max(t.lambda_tilde1, t.lambda_tilde2);
    const double h = rel_step * rho;
    const auto up = exact(rho + h), down = exact(rho - h);
    for (int l = 0; l < 2; ++l) t.d_rho_lambda[l] = ((rho + h) * up[l] - (rho - h) * down[l]) / (2.0 * h);
    return t;
}

double log_det_half(const SymMatrix& sigma_x, double rho) {
    const int n = sigma_x.n();
    const Eigen::LLT<Eigen::MatrixXd> llt(Eigen::MatrixXd::Identity(n, n) + rho * sigma_x.matrix());
    if (llt.info() != Eigen::Success) throw std::invalid_argument("I + rho Sigma_x is not positive definite");
    const Eigen::MatrixXd l = llt.matrixL();
    return l.diagonal().array().log().sum();
}

double mi_gauss_bound(const SymMatrix& sigma_x, double rho) {
    check_rho(rho);
    return log_det_half(sigma_x, rho) / rho;
}

BoundChain bound_chain(const CovPair& pair) {
    check_rho(pair.rho);
    BoundChain b;
    b.half_tr_sigma_c = 0.5 * pair.sigma_c.trace();
    b.gauss_bound = mi_gauss_bound(pair.sigma_x, pair.rho);
    b.half_tr_sigma_x = 0.5 * pair.sigma_x.trace();
    b.inv_1p_rho = 1.0 / (1.0 + pair.rho);
    b.log1p_rho_over_rho = std::log1p(pair.rho) / pair.rho;
    return b;
}

QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("quadrature order must be positive");
    // Golub-Welsch: eigen-decomposition of the Jacobi matrix of the
    // Hermite recurrence.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) jacobi(i, i - 1) = jacobi(i - 1, i) = std::sqrt(i / 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    QuadratureRule rule;
    rule.nodes = solver.eigenvalues();
    rule.weights = std::sqrt(std::numbers::pi) * solver.eigenvectors().row(0).transpose().array().square();
    return rule;
}

double binary_input_mi(double rho) {
    if (!(rho >= 0.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be nonnegative and finite");
    if (rho == 0.0) return 0.0;
    static const QuadratureRule rule = gauss_hermite(kHermiteNodes);
    const double s = std::sqrt(rho);
    double expectation = 0.0;
    for (int i = 0; i < rule.nodes.size(); ++i) {
        expectation += rule.weights(i) * log_cosh(rho - s * std::numbers::sqrt2 * rule.nodes(i));
    }
    expectation /= std::sqrt(std::numbers::pi);
    return rho - expectation;
}

double binary_input_mi_simpson(double rho, double tol) {
    if (!(rho >= 0.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be nonnegative and finite");
    if (rho == 0.0) return 0.0;
    constexpr double a = -10.0, b = 10.0;
    // Split where the argument of log cosh changes sign.
    const double kink = std::clamp(std::sqrt(rho), a + 1e-3, b - 1e-3);
    double total = 0.0;
    for (const auto& [lo, hi] : {std::pair{a, kink}, std::pair{kink, b}}) {
        const double fa = mi_integrand(rho, lo), fb = mi_integrand(rho, hi), fm = mi_integrand(rho, 0.5 * (lo + hi));
        total += simpson_step(rho, lo, hi, fa, fm, fb, (hi - lo) / 6.0 * (fa + 4.0 * fm + fb), tol, 50);
    }
    return rho - total;
}

double mi_per_branch_bound(const CovPair& pair) {
    const double gauss = mi_gauss_bound(pair.sigma_x, pair.rho);
    const double binary = pair.sigma_x.n() * binary_input_mi(pair.rho) / pair.rho;
    return std::min(gauss, binary);
}

SymMatrix sigma_x_prime(double beta1, double beta2, double theta12p) { return sigma_x_2x2(beta1, beta2, theta12p); }

}  // namespace sstkf
