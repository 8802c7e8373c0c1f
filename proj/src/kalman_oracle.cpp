// SPDX-License-Identifier: Apache-2.0

#include "sstkf/kalman_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace sstkf {

namespace {

Eigen::MatrixXd gaussian_matrix(Rng& rng, int rows, int cols, double scale) {
    Eigen::MatrixXd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = scale * rng.normal();
    return m;
}

Eigen::VectorXd gaussian_draw(Rng& rng, const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov) {
    // Eigen decomposition tolerates singular (PSD) covariances.
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (cov + cov.transpose()));
    const Eigen::VectorXd sd = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    Eigen::VectorXd w(mean.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = rng.normal();
    return mean + es.eigenvectors() * sd.asDiagonal() * w;
}

}  // namespace

JointGaussianOracle::JointGaussianOracle(const StateSpaceModel& model, int last) : model_(model), last_(last) {
    if (last < 0) throw std::invalid_argument("oracle needs last >= 0");
    const auto steps = static_cast<std::size_t>(last) + 1;
    means_.resize(steps);
    cov_.resize(steps * steps);
    means_[0] = model.x0_mean();
    cov_[0] = model.X0();
    for (int i = 1; i <= last; ++i) {
        const Eigen::MatrixXd& F = model.F(i - 1);
        means_[static_cast<std::size_t>(i)] = F * means_[static_cast<std::size_t>(i - 1)];
        // Cov(x_i, x_j) = F_{i-1} Cov(x_{i-1}, x_j) for j < i.
        for (int j = 0; j < i; ++j) {
            const Eigen::MatrixXd c = F * cov_[static_cast<std::size_t>(i - 1) * steps + static_cast<std::size_t>(j)];
            cov_[static_cast<std::size_t>(i) * steps + static_cast<std::size_t>(j)] = c;
            cov_[static_cast<std::size_t>(j) * steps + static_cast<std::size_t>(i)] = c.transpose();
        }
        const Eigen::MatrixXd& prev = cov_[static_cast<std::size_t>(i - 1) * steps + static_cast<std::size_t>(i - 1)];
        cov_[static_cast<std::size_t>(i) * steps + static_cast<std::size_t>(i)] = F * prev * F.transpose() + model.U(i - 1);
    }
}

Eigen::MatrixXd JointGaussianOracle::state_cov(int i, int j) const {
    if (i < 0 || j < 0 || i > last_ || j > last_) throw std::out_of_range("oracle step out of range");
    const auto steps = static_cast<std::size_t>(last_) + 1;
    return cov_[static_cast<std::size_t>(i) * steps + static_cast<std::size_t>(j)];
}

Eigen::MatrixXd JointGaussianOracle::obs_cov(int b) const {
    const int m = model_.m();
    Eigen::MatrixXd z((b + 1) * m, (b + 1) * m);
    for (int i = 0; i <= b; ++i) {
        for (int j = 0; j <= b; ++j) {
            Eigen::MatrixXd blk = model_.H(i) * state_cov(i, j) * model_.H(j).transpose();
            if (i == j) blk += model_.W(i);
            z.block(i * m, j * m, m, m) = blk;
        }
    }
    return z;
}

Eigen::MatrixXd JointGaussianOracle::state_obs_cov(int k, int b) const {
    const int m = model_.m();
    Eigen::MatrixXd c(model_.n(), (b + 1) * m);
    for (int j = 0; j <= b; ++j) c.block(0, j * m, model_.n(), m) = state_cov(k, j) * model_.H(j).transpose();
    return c;
}

GaussianEstimate JointGaussianOracle::condition(int k, int b, const std::vector<Eigen::VectorXd>& z) const {
    if (b > last_ || k > last_) throw std::out_of_range("oracle step out of range");
    GaussianEstimate out{means_[static_cast<std::size_t>(k)], state_cov(k, k)};
    if (b < 0) return out;
    if (z.size() < static_cast<std::size_t>(b) + 1) throw std::invalid_argument("not enough observations");
    const int m = model_.m();
    Eigen::VectorXd dz((b + 1) * m);
    for (int j = 0; j <= b; ++j) dz.segment(j * m, m) = z[static_cast<std::size_t>(j)] - model_.H(j) * means_[static_cast<std::size_t>(j)];
    const Eigen::MatrixXd c = state_obs_cov(k, b);
    const Eigen::LDLT<Eigen::MatrixXd> zf(obs_cov(b));
    out.mean += c * zf.solve(dz);
    out.cov -= c * zf.solve(c.transpose());
    out.cov = 0.5 * (out.cov + out.cov.transpose());
    return out;
}

Eigen::MatrixXd JointGaussianOracle::error_cov(int k, int b) const {
    if (b > last_ || k > last_) throw std::out_of_range("oracle step out of range");
    Eigen::MatrixXd cov = state_cov(k, k);
    if (b < 0) return cov;
    const Eigen::MatrixXd c = state_obs_cov(k, b);
    cov -= c * obs_cov(b).ldlt().solve(c.transpose());
    return 0.5 * (cov + cov.transpose());
}

double JointGaussianOracle::mutual_information(int k) const {
    if (k > last_) throw std::out_of_range("oracle step out of range");
    // Plain determinants: the stacked covariance is small.
    double log_w = 0.0;
    for (int j = 0; j <= k; ++j) log_w += std::log(model_.W(j).determinant());
    return 0.5 * (std::log(obs_cov(k).determinant()) - log_w);
}

StateSpaceModel random_model(Rng& rng, int n, int m, int steps) {
    if (n <= 0 || m <= 0 || steps <= 0) throw std::invalid_argument("random_model: dimensions must be positive");
    std::vector<StepMatrices> list;
    for (int s = 0; s < steps; ++s) {
        StepMatrices st;
        for (;;) {
            st.F = gaussian_matrix(rng, n, n, 0.7 / std::sqrt(n));
            if (std::abs(st.F.determinant()) > 0.05 * std::pow(0.7, n)) break;
        }
        st.H = gaussian_matrix(rng, m, n, 1.0);
        const Eigen::MatrixXd bu = gaussian_matrix(rng, n, n, 0.5);
        st.U = bu * bu.transpose();
        const Eigen::MatrixXd bw = gaussian_matrix(rng, m, m, 0.5);
        st.W = bw * bw.transpose() + 0.3 * Eigen::MatrixXd::Identity(m, m);
        list.push_back(std::move(st));
    }
    const Eigen::MatrixXd bx = gaussian_matrix(rng, n, n, 0.7);
    Eigen::VectorXd mean(n);
    for (int i = 0; i < n; ++i) mean(i) = rng.normal();
    return StateSpaceModel(std::move(list), mean, bx * bx.transpose() + 0.1 * Eigen::MatrixXd::Identity(n, n));
}

Realization simulate_model(const StateSpaceModel& model, int last, Rng& rng) {
    Realization r;
    Eigen::VectorXd x = gaussian_draw(rng, model.x0_mean(), model.X0());
    for (int k = 0; k <= last; ++k) {
        if (k > 0) x = model.F(k - 1) * x + gaussian_draw(rng, Eigen::VectorXd::Zero(model.n()), model.U(k - 1));
        r.x.push_back(x);
        r.z.push_back(model.H(k) * x + gaussian_draw(rng, Eigen::VectorXd::Zero(model.m()), model.W(k)));
    }
    return r;
}

std::vector<IdentityCheck> kalman_check(std::uint64_t seed, int states, int obs, int steps) {
    if (steps < 2) throw std::invalid_argument("kalman_check needs at least 2 steps");
    Rng rng(seed, 0);
    const StateSpaceModel model = random_model(rng, states, obs, steps);
    const int last = steps - 1;
    const Realization real = simulate_model(model, last, rng);
    const FilterTrace t = run_filter(model, real.z);
    const FilterTrace tc = run_filter(model, real.z, Recursion::Combined);
    const JointGaussianOracle oracle(model, last);

    auto diff = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return (a - b).cwiseAbs().maxCoeff(); };
    auto order = [](const Eigen::MatrixXd& lo, const Eigen::MatrixXd& hi) { return std::max(0.0, -loewner_gap(lo, hi)); };

    IdentityCheck filt{"filter_estimate_vs_projection", 0.0, 1e-9};
    IdentityCheck filt_cov{"filter_covariance_vs_projection", 0.0, 1e-9};
    IdentityCheck pred{"prediction_vs_projection", 0.0, 1e-9};
    IdentityCheck combined{"combined_recursion_vs_two_step", 0.0, 1e-12};
    IdentityCheck mi{"gaussian_mi_vs_stacked_determinant", 0.0, 1e-9};
    IdentityCheck mi_forms{"gaussian_mi_innovation_vs_covariance_form", 0.0, 1e-10};
    IdentityCheck smooth{"smoother_covariance_vs_projection", 0.0, 1e-9};
    IdentityCheck smooth_mean{"smoothed_estimate_vs_projection", 0.0, 1e-9};
    IdentityCheck ordering{"order_smoothed_le_filtered_le_predicted", 0.0, 1e-10};
    IdentityCheck lemma{"matrix_inversion_lemma", 0.0, 1e-10};

    for (int k = 0; k <= last; ++k) {
        const auto s = static_cast<std::size_t>(k);
        const GaussianEstimate f = oracle.condition(k, k, real.z);
        const GaussianEstimate p = oracle.condition(k, k - 1, real.z);
        filt.max_deviation = std::max(filt.max_deviation, diff(t[s].xhat_filt, f.mean));
        filt_cov.max_deviation = std::max(filt_cov.max_deviation, diff(t[s].P, f.cov));
        pred.max_deviation = std::max({pred.max_deviation, diff(t[s].xhat_pred, p.mean), diff(t[s].M, p.cov)});
        combined.max_deviation = std::max({combined.max_deviation, diff(t[s].M, tc[s].M), diff(t[s].P, tc[s].P),
                                           diff(t[s].xhat_filt, tc[s].xhat_filt)});
        mi.max_deviation = std::max(mi.max_deviation, std::abs(gaussian_mi(model, t, k) - oracle.mutual_information(k)));
        mi_forms.max_deviation =
            std::max(mi_forms.max_deviation, std::abs(gaussian_mi(model, t, k) - gaussian_mi_cov_form(t, k)));
        ordering.max_deviation = std::max(ordering.max_deviation, order(t[s].P, t[s].M));
        Eigen::MatrixXd prev = t[s].P;
        for (int b = k + 1; b <= last; ++b) {
            const Eigen::MatrixXd sb = smoother_cov(model, t, k, b);
            smooth.max_deviation = std::max(smooth.max_deviation, diff(sb, oracle.error_cov(k, b)));
            smooth_mean.max_deviation = std::max(
                smooth_mean.max_deviation, diff(smoothed_estimate(model, t, k, b), oracle.condition(k, b, real.z).mean));
            ordering.max_deviation = std::max(ordering.max_deviation, order(sb, prev));
            prev = sb;
        }
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % states, m = 1 + trial % obs;
        Eigen::MatrixXd a = gaussian_matrix(rng, n, n, 0.5), b = gaussian_matrix(rng, m, m, 0.5);
        a = a * a.transpose() + 0.5 * Eigen::MatrixXd::Identity(n, n);
        b = b * b.transpose() + 0.5 * Eigen::MatrixXd::Identity(m, m);
        lemma.max_deviation = std::max(lemma.max_deviation, inversion_lemma_deviation(a, b, gaussian_matrix(rng, m, n, 1.0)));
    }
    return {filt, filt_cov, pred, combined, mi, mi_forms, smooth, smooth_mean, ordering, lemma};
}

}  // namespace sstkf
