// SPDX-License-Identifier: Apache-2.0
//
// Exact parity probabilities of sums of i.i.d. Bernoulli(eps) error bits.
// Each main-decoder symbol v^{(l)} is the XOR of the error variables in the
// support of column l of the block map, so marginal and joint probabilities
// follow from the support sizes and their overlaps.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "sstkf/convcode.hpp"

namespace sstkf {

/// Error bit e^{(component)}_{k-delay}; components are numbered from 1.
struct ErrorVar {
    int component = 1;
    int delay = 0;
    friend auto operator<=>(const ErrorVar&, const ErrorVar&) = default;
};

class ErrorSupport {
public:
    ErrorSupport() = default;
    explicit ErrorSupport(std::set<ErrorVar> vars) : vars_(std::move(vars)) {}
    ErrorSupport(std::initializer_list<ErrorVar> vars) : vars_(vars) {}

    const std::set<ErrorVar>& vars() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    bool contains(const ErrorVar& v) const { return vars_.contains(v); }

    ErrorSupport intersection(const ErrorSupport& other) const;
    ErrorSupport difference(const ErrorSupport& other) const;
    ErrorSupport symmetric_difference(const ErrorSupport& other) const;
    ErrorSupport union_with(const ErrorSupport& other) const;

    friend bool operator==(const ErrorSupport&, const ErrorSupport&) = default;

private:
    std::set<ErrorVar> vars_;
};

/// {(row + 1, j) : coefficient j of M(row, col) is 1}; col is 0-based.
ErrorSupport support_of(const BinaryPolyMatrix& m, int col);

/// Supports of both main-decoder symbols for `code` viewed in `mode`.
std::array<ErrorSupport, 2> code_supports(const ConvCode& code, DecoderMode mode);

/// (1 - (1 - 2 eps)^n) / 2. Throws std::invalid_argument for eps outside [0, 1].
double parity_one_prob(std::size_t n, double eps);

/// P(both parities odd).
double joint_parity_prob(const ErrorSupport& s1, const ErrorSupport& s2, double eps);

/// Exhaustive sum over all assignments of the union. Throws
/// std::length_error when the union has more than 24 variables.
double brute_force_joint(const ErrorSupport& s1, const ErrorSupport& s2, double eps);

/// P(v^{(1)} = 1, v^{(2)} = 1) - P(v^{(1)} = 1) P(v^{(2)} = 1).
double theta(const ErrorSupport& s1, const ErrorSupport& s2, double eps);

/// P(v^{(l)} = pattern[l] for every l) for any number of supports, by the
/// Walsh expansion 2^{-m} sum_t (-1)^{t.p} (1-2eps)^{|symmetric difference of
/// the supports selected by t|}.
double pattern_prob(const std::vector<ErrorSupport>& supports, const std::vector<std::uint8_t>& pattern, double eps);

/// Exhaustive counterpart of pattern_prob (union of at most 24 variables).
double brute_force_pattern(const std::vector<ErrorSupport>& supports, const std::vector<std::uint8_t>& pattern,
                           double eps);

/// The four covariance expressions over the (0,0), (0,1), (1,0), (1,1)
/// joint probabilities; all equal theta.
std::array<double, 4> theta_four_ways(const ErrorSupport& s1, const ErrorSupport& s2, double eps);

/// Joint table {P00, P01, P10, P11} with the given marginals and P11 = u.
/// Throws std::invalid_argument unless 0 <= u <= min(alpha_i, alpha_j) and
/// the table is a distribution.
std::array<double, 4> pair_table(double alpha_i, double alpha_j, double u);

/// value = numerator / 2^exponent, reduced.
struct DyadicRational {
    std::int64_t numerator = 0;
    int exponent = 0;
    friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
};

/// Polynomial in eps with integer coefficients, index j = coefficient of eps^j.
class EpsPolynomial {
public:
    EpsPolynomial() = default;
    explicit EpsPolynomial(std::vector<std::int64_t> coefficients);

    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double operator()(double eps) const;
    DyadicRational value_at_half() const;
    std::string to_string() const;

    friend bool operator==(const EpsPolynomial&, const EpsPolynomial&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

inline constexpr std::size_t kMaxPolynomialSupport = 30;

/// Expansion of (1 - (1-2eps)^n)/2. Throws std::invalid_argument for n > 30.
EpsPolynomial marginal_polynomial(std::size_t n);

/// Expansion of joint_parity_prob. Throws std::invalid_argument when the
/// union exceeds 30 variables.
EpsPolynomial joint_polynomial(const ErrorSupport& s1, const ErrorSupport& s2);

/// Exact expansion of pattern_prob.
EpsPolynomial pattern_polynomial(const std::vector<ErrorSupport>& supports, const std::vector<std::uint8_t>& pattern);

struct ParityPoint {
    double epsilon = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha11 = 0.0;
    double theta12 = 0.0;
};

ParityPoint parity_point(const std::array<ErrorSupport, 2>& supports, double eps);

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

struct MonteCarloProbs {
    std::uint64_t trials = 0;
    Estimate alpha1;
    Estimate alpha2;
    Estimate alpha11;
};

/// Frequencies of v^{(l)} = 1 when independent Bernoulli(eps) error windows
/// are pushed through the block map. Trials are independent, so the
/// standard errors are binomial. Throws std::invalid_argument for trials == 0.
MonteCarloProbs monte_carlo_probs(const ConvCode& code, DecoderMode mode, double eps, std::uint64_t trials,
                                  std::uint64_t seed);

}  // namespace sstkf
