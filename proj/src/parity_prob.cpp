// SPDX-License-Identifier: Apache-2.0

#include "sstkf/parity_prob.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sstkf/channel.hpp"

namespace sstkf {

namespace {

__extension__ typedef __int128 Wide;

void check_eps(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in [0, 1]");
}

template <class Op>
ErrorSupport combine(const ErrorSupport& a, const ErrorSupport& b, Op op) {
    std::set<ErrorVar> out;
    op(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(), std::inserter(out, out.end()));
    return ErrorSupport(std::move(out));
}

// Size of the XOR of the supports selected by the bits of `mask`.
std::size_t selected_xor_size(const std::vector<ErrorSupport>& supports, std::uint32_t mask) {
    ErrorSupport acc;
    for (std::size_t i = 0; i < supports.size(); ++i) {
        if ((mask >> i) & 1u) acc = acc.symmetric_difference(supports[i]);
    }
    return acc.size();
}

void check_pattern(const std::vector<ErrorSupport>& supports, const std::vector<std::uint8_t>& pattern) {
    if (supports.size() != pattern.size()) throw std::invalid_argument("pattern length must match the support count");
    if (supports.empty() || supports.size() > 16) throw std::invalid_argument("between 1 and 16 supports are supported");
}

// Coefficients of (1 - 2 eps)^n.
std::vector<Wide> q_power(std::size_t n) {
    std::vector<Wide> c(n + 1);
    Wide binom = 1;
    Wide pow2 = 1;
    for (std::size_t j = 0; j <= n; ++j) {
        c[j] = (j % 2 ? -1 : 1) * binom * pow2;
        binom = binom * static_cast<Wide>(n - j) / static_cast<Wide>(j + 1);
        pow2 *= 2;
    }
    return c;
}

// (sum_n weight_n (1-2eps)^n) / 2^shift with exact division.
EpsPolynomial from_q_weights(const std::map<std::size_t, Wide>& weights, int shift) {
    std::size_t top = 0;
    for (const auto& [n, w] : weights) {
        if (w != 0) top = std::max(top, n);
    }
    std::vector<Wide> acc(top + 1, 0);
    for (const auto& [n, w] : weights) {
        if (w == 0) continue;
        const auto c = q_power(n);
        for (std::size_t j = 0; j < c.size(); ++j) acc[j] += w * c[j];
    }
    const Wide den = Wide{1} << shift;
    std::vector<std::int64_t> out(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j) {
        if (acc[j] % den != 0) throw std::logic_error("non-integer parity polynomial coefficient");
        const Wide v = acc[j] / den;
        if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
            throw std::overflow_error("parity polynomial coefficient exceeds 64 bits");
        }
        out[j] = static_cast<std::int64_t>(v);
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return EpsPolynomial(std::move(out));
}

}  // namespace

ErrorSupport ErrorSupport::intersection(const ErrorSupport& other) const {
    return combine(*this, other, [](auto... a) { return std::set_intersection(a...); });
}
ErrorSupport ErrorSupport::difference(const ErrorSupport& other) const {
    return combine(*this, other, [](auto... a) { return std::set_difference(a...); });
}
ErrorSupport ErrorSupport::symmetric_difference(const ErrorSupport& other) const {
    return combine(*this, other, [](auto... a) { return std::set_symmetric_difference(a...); });
}
ErrorSupport ErrorSupport::union_with(const ErrorSupport& other) const {
    return combine(*this, other, [](auto... a) { return std::set_union(a...); });
}

ErrorSupport support_of(const BinaryPolyMatrix& m, int col) {
    if (col < 0 || col >= m.cols()) throw std::out_of_range("column index out of range");
    std::set<ErrorVar> vars;
    for (int row = 0; row < m.rows(); ++row) {
        const BinaryPoly p = m.at(row, col);
        for (int j = 0; j <= BinaryPoly::kMaxDegree; ++j) {
            if (p.coeff(j)) vars.insert({row + 1, j});
        }
    }
    return ErrorSupport(std::move(vars));
}

std::array<ErrorSupport, 2> code_supports(const ConvCode& code, DecoderMode mode) {
    const auto m = main_encoded_block_map(code, mode);
    return {support_of(m, 0), support_of(m, 1)};
}

double parity_one_prob(std::size_t n, double eps) {
    check_eps(eps);
    return 0.5 * (1.0 - std::pow(1.0 - 2.0 * eps, static_cast<double>(n)));
}

double joint_parity_prob(const ErrorSupport& s1, const ErrorSupport& s2, double eps) {
    check_eps(eps);
    const std::size_t a = s1.difference(s2).size();
    const std::size_t b = s2.difference(s1).size();
    const std::size_t c = s1.intersection(s2).size();
    auto odd = [eps](std::size_t n) { return parity_one_prob(n, eps); };
    auto even = [&](std::size_t n) { return 1.0 - odd(n); };
    return even(c) * odd(a) * odd(b) + odd(c) * even(a) * even(b);
}

double brute_force_pattern(const std::vector<ErrorSupport>& supports, const std::vector<std::uint8_t>& pattern,
                           double eps) {
    check_eps(eps);
    check_pattern(supports, pattern);
    ErrorSupport all;
    for (const auto& s : supports) all = all.union_with(s);
    const std::size_t n = all.size();
    if (n > 24) throw std::length_error("brute force limited to 24 variables");
    const std::vector<ErrorVar> index(all.vars().begin(), all.vars().end());
    std::vector<std::uint32_t> masks;
    for (const auto& s : supports) {
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (s.contains(index[i])) m |= 1u << i;
        }
        masks.push_back(m);
    }
    std::vector<double> weight(n + 1);
    for (std::size_t w = 0; w <= n; ++w) {
        weight[w] = std::pow(eps, static_cast<double>(w)) * std::pow(1.0 - eps, static_cast<double>(n - w));
    }
    double total = 0.0;
    for (std::uint32_t assign = 0; assign < (1u << n); ++assign) {
        bool match = true;
        for (std::size_t i = 0; i < masks.size() && match; ++i) {
            match = static_cast<std::uint8_t>(std::popcount(assign & masks[i]) & 1) == (pattern[i] & 1u);
        }
        if (match) total += weight[std::popcount(assign)];
    }
    return total;
}

double brute_force_joint(const ErrorSupport& s1, const ErrorSupport& s2, double eps) {
    return brute_force_pattern({s1, s2}, {1, 1}, eps);
}

double theta(const ErrorSupport& s1, const ErrorSupport& s2, double eps) {
    return joint_parity_prob(s1, s2, eps) - parity_one_prob(s1.size(), eps) * parity_one_prob(s2.size(), eps);
}

double pattern_prob(const std::vector<ErrorSupport>& supports, const std::vector<std::uint8_t>& pattern, double eps) {
    check_eps(eps);
    check_pattern(supports, pattern);
    const double q = 1.0 - 2.0 * eps;
    const auto m = static_cast<std::uint32_t>(supports.size());
    double total = 0.0;
    for (std::uint32_t t = 0; t < (1u << m); ++t) {
        int sign_bits = 0;
        for (std::uint32_t i = 0; i < m; ++i) sign_bits += ((t >> i) & 1u) & pattern[i];
        const double sign = sign_bits % 2 ? -1.0 : 1.0;
        total += sign * std::pow(q, static_cast<double>(selected_xor_size(supports, t)));
    }
    return std::ldexp(total, -static_cast<int>(m));
}

std::array<double, 4> theta_four_ways(const ErrorSupport& s1, const ErrorSupport& s2, double eps) {
    const double p00 = pattern_prob({s1, s2}, {0, 0}, eps);
    const double p01 = pattern_prob({s1, s2}, {0, 1}, eps);
    const double p10 = pattern_prob({s1, s2}, {1, 0}, eps);
    const double p11 = pattern_prob({s1, s2}, {1, 1}, eps);
    const double i1 = p10 + p11, j1 = p01 + p11;
    const double i0 = 1.0 - i1, j0 = 1.0 - j1;
    return {p00 - i0 * j0, i0 * j1 - p01, i1 * j0 - p10, p11 - i1 * j1};
}

std::array<double, 4> pair_table(double alpha_i, double alpha_j, double u) {
    if (!(u >= 0.0 && u <= std::min(alpha_i, alpha_j))) throw std::invalid_argument("u must lie in [0, min(alpha_i, alpha_j)]");
    const std::array<double, 4> t{1.0 - alpha_i - alpha_j + u, alpha_j - u, alpha_i - u, u};
    if (t[0] < 0.0) throw std::invalid_argument("pair table has a negative entry");
    return t;
}

EpsPolynomial::EpsPolynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) coeffs_.push_back(0);
}

double EpsPolynomial::operator()(double eps) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * eps + static_cast<double>(*it);
    return acc;
}

DyadicRational EpsPolynomial::value_at_half() const {
    const int d = degree();
    Wide num = 0;
    for (int j = 0; j <= d; ++j) num += static_cast<Wide>(coeffs_[j]) << (d - j);
    int exponent = d;
    while (exponent > 0 && num % 2 == 0) {
        num /= 2;
        --exponent;
    }
    return {static_cast<std::int64_t>(num), exponent};
}

std::string EpsPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const std::int64_t c = coeffs_[j];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        const std::int64_t mag = c < 0 ? -c : c;
        if (mag != 1 || j == 0) os << mag;
        if (j >= 1) os << "e";
        if (j >= 2) os << '^' << j;
        first = false;
    }
    return first ? "0" : os.str();
}

EpsPolynomial marginal_polynomial(std::size_t n) {
    if (n > kMaxPolynomialSupport) throw std::invalid_argument("marginal_polynomial supports n <= 30");
    std::map<std::size_t, Wide> w{{0, 1}};
    w[n] -= 1;
    return from_q_weights(w, 1);
}

EpsPolynomial pattern_polynomial(const std::vector<ErrorSupport>& supports, const std::vector<std::uint8_t>& pattern) {
    check_pattern(supports, pattern);
    ErrorSupport all;
    for (const auto& s : supports) all = all.union_with(s);
    if (all.size() > kMaxPolynomialSupport) throw std::invalid_argument("support union exceeds 30 variables");
    const auto m = static_cast<std::uint32_t>(supports.size());
    std::map<std::size_t, Wide> w;
    for (std::uint32_t t = 0; t < (1u << m); ++t) {
        int sign_bits = 0;
        for (std::uint32_t i = 0; i < m; ++i) sign_bits += ((t >> i) & 1u) & pattern[i];
        w[selected_xor_size(supports, t)] += sign_bits % 2 ? -1 : 1;
    }
    return from_q_weights(w, static_cast<int>(m));
}

EpsPolynomial joint_polynomial(const ErrorSupport& s1, const ErrorSupport& s2) {
    return pattern_polynomial({s1, s2}, {1, 1});
}

ParityPoint parity_point(const std::array<ErrorSupport, 2>& supports, double eps) {
    ParityPoint p;
    p.epsilon = eps;
    p.alpha1 = parity_one_prob(supports[0].size(), eps);
    p.alpha2 = parity_one_prob(supports[1].size(), eps);
    p.alpha11 = joint_parity_prob(supports[0], supports[1], eps);
    p.theta12 = p.alpha11 - p.alpha1 * p.alpha2;
    return p;
}

MonteCarloProbs monte_carlo_probs(const ConvCode& code, DecoderMode mode, double eps, std::uint64_t trials,
                                  std::uint64_t seed) {
    check_eps(eps);
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    const auto m = main_encoded_block_map(code, mode);
    const int window = m.max_degree() + 1;
    constexpr std::uint64_t kShard = 1 << 16;
    std::uint64_t c1 = 0, c2 = 0, c11 = 0;
    for (std::uint64_t shard = 0; shard * kShard < trials; ++shard) {
        Rng rng(seed, shard);
        const std::uint64_t count = std::min(kShard, trials - shard * kShard);
        for (std::uint64_t t = 0; t < count; ++t) {
            std::uint64_t e1 = 0, e2 = 0;
            for (int j = 0; j < window; ++j) {
                if (rng.bernoulli(eps)) e1 |= std::uint64_t{1} << j;
                if (rng.bernoulli(eps)) e2 |= std::uint64_t{1} << j;
            }
            const int v1 = (std::popcount(e1 & m.at(0, 0).bits()) + std::popcount(e2 & m.at(1, 0).bits())) & 1;
            const int v2 = (std::popcount(e1 & m.at(0, 1).bits()) + std::popcount(e2 & m.at(1, 1).bits())) & 1;
            c1 += v1;
            c2 += v2;
            c11 += v1 & v2;
        }
    }
    const double n = static_cast<double>(trials);
    auto est = [n](std::uint64_t c) {
        const double p = c / n;
        return Estimate{p, std::sqrt(p * (1.0 - p) / n)};
    };
    return {trials, est(c1), est(c2), est(c11)};
}

}  // namespace sstkf
