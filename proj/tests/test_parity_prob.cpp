// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "reference_tables.hpp"
#include "sstkf/channel.hpp"
#include "sstkf/parity_prob.hpp"
#include "support.hpp"

using namespace sstkf;

namespace {

using Coeffs = std::vector<std::int64_t>;
using namespace sstkf::reference;

double horner(const Coeffs& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + static_cast<double>(*it);
    return acc;
}

ErrorSupport random_support(testkit::Gen& gen, int max_delay) {
    std::set<ErrorVar> vars;
    for (int comp = 1; comp <= 2; ++comp)
        for (int d = 0; d <= max_delay; ++d)
            if (gen.integer(0, 2) == 0) vars.insert({comp, d});
    return ErrorSupport(std::move(vars));
}

}  // namespace

TEST(SupportOf, C1FirstColumn) {
    const auto s = code_supports(builtin_code("c1"), DecoderMode::General);
    const std::set<ErrorVar> expected{{1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 3}};
    EXPECT_EQ(s[0].vars(), expected);
    EXPECT_EQ(s[1].size(), 6u);
    EXPECT_EQ(s[0].difference(s[1]).size(), 1u);
    EXPECT_EQ(s[1].difference(s[0]).size(), 2u);
    EXPECT_EQ(s[0].intersection(s[1]).size(), 4u);
}

TEST(SupportOf, C2Sizes) {
    // b11 has 8 terms and b21 has 4.
    const auto s = code_supports(builtin_code("c2"), DecoderMode::General);
    EXPECT_EQ(s[0].size(), 12u);
    EXPECT_EQ(s[1].size(), 13u);
    EXPECT_EQ(s[0].intersection(s[1]).size(), 9u);
}

TEST(SupportOf, ZeroColumn) { EXPECT_EQ(support_of(BinaryPolyMatrix(2, 2), 0).size(), 0u); }

TEST(ParityOneProb, Values) {
    EXPECT_NEAR(parity_one_prob(5, 0.1), horner(kC1Alpha1, 0.1), 1e-15);
    EXPECT_NEAR(parity_one_prob(5, 0.1), 0.33616, 1e-12);
    for (std::size_t n : {1u, 4u, 17u}) EXPECT_DOUBLE_EQ(parity_one_prob(n, 0.5), 0.5);
    EXPECT_EQ(parity_one_prob(0, 0.3), 0.0);
    EXPECT_EQ(parity_one_prob(9, 0.0), 0.0);
    EXPECT_THROW(parity_one_prob(3, -0.1), std::invalid_argument);
}

TEST(JointParityProb, Values) {
    const auto c1 = code_supports(builtin_code("c1"), DecoderMode::General);
    EXPECT_NEAR(joint_parity_prob(c1[0], c1[1], 0.1), 0.230544, 1e-12);
    EXPECT_NEAR(joint_parity_prob(c1[0], c1[1], 0.1), horner(kC1Joint, 0.1), 1e-14);
    EXPECT_NEAR(brute_force_joint(c1[0], c1[1], 0.1), 0.230544, 1e-12);
    EXPECT_NEAR(joint_parity_prob(c1[0], c1[1], 0.5), 0.25, 1e-15);

    const ErrorSupport a({{1, 0}, {1, 1}}), b({{2, 0}, {2, 4}, {2, 5}});
    EXPECT_NEAR(joint_parity_prob(a, b, 0.17), parity_one_prob(2, 0.17) * parity_one_prob(3, 0.17), 1e-15);
}

TEST(BruteForceJoint, SharedSingleton) {
    const ErrorSupport s({{1, 3}});
    EXPECT_NEAR(brute_force_joint(s, s, 0.23), 0.23, 1e-15);
}

TEST(BruteForceJoint, C2MatchesPolynomial) {
    const auto c2 = code_supports(builtin_code("c2"), DecoderMode::General);
    EXPECT_NEAR(brute_force_joint(c2[0], c2[1], 0.2), horner(kC2Joint, 0.2), 1e-12);
    EXPECT_NEAR(joint_parity_prob(c2[0], c2[1], 0.2), horner(kC2Joint, 0.2), 1e-12);
}

TEST(BruteForceJoint, TooLarge) {
    std::set<ErrorVar> vars;
    for (int d = 0; d < 25; ++d) vars.insert({1, d});
    const ErrorSupport big(vars);
    EXPECT_THROW(brute_force_joint(big, big, 0.1), std::length_error);
}

TEST(BruteForceJoint, MatchesClosedFormOnRandomSupports) {
    testkit::Gen gen(51);
    for (int i = 0; i < 300; ++i) {
        const ErrorSupport s1 = random_support(gen, 7), s2 = random_support(gen, 7);
        const double eps = gen.real(0.0, 1.0);
        ASSERT_NEAR(brute_force_joint(s1, s2, eps), joint_parity_prob(s1, s2, eps), 1e-12);
    }
}

TEST(Polynomials, MarginalsExact) {
    EXPECT_EQ(marginal_polynomial(5).coefficients(), kC1Alpha1);
    EXPECT_EQ(marginal_polynomial(6).coefficients(), kC1Alpha2);
    EXPECT_EQ(marginal_polynomial(12).coefficients(), kC2Alpha1);
    EXPECT_EQ(marginal_polynomial(13).coefficients(), kC2Alpha2);
    EXPECT_EQ(marginal_polynomial(0).coefficients(), Coeffs{0});
    EXPECT_THROW(marginal_polynomial(31), std::invalid_argument);
}

TEST(Polynomials, JointsExact) {
    const auto c1 = code_supports(builtin_code("c1"), DecoderMode::General);
    const auto c2 = code_supports(builtin_code("c2"), DecoderMode::General);
    EXPECT_EQ(joint_polynomial(c1[0], c1[1]).coefficients(), kC1Joint);
    EXPECT_EQ(joint_polynomial(c2[0], c2[1]).coefficients(), kC2Joint);
    EXPECT_EQ(joint_polynomial(ErrorSupport({{1, 0}}), ErrorSupport({{2, 0}})).coefficients(), (Coeffs{0, 0, 1}));
}

TEST(Polynomials, ValueAtHalf) {
    for (std::size_t n = 1; n <= 30; ++n) {
        EXPECT_EQ(marginal_polynomial(n).value_at_half(), (DyadicRational{1, 1})) << n;
    }
    const auto c2 = code_supports(builtin_code("c2"), DecoderMode::General);
    EXPECT_EQ(joint_polynomial(c2[0], c2[1]).value_at_half(), (DyadicRational{1, 2}));
}

TEST(Polynomials, AgreeWithFloatingPoint) {
    testkit::Gen gen(52);
    for (int i = 0; i < 200; ++i) {
        const ErrorSupport s1 = random_support(gen, 6), s2 = random_support(gen, 6);
        const EpsPolynomial p = joint_polynomial(s1, s2);
        const double eps = gen.real(0.0, 0.5);
        ASSERT_NEAR(p(eps), joint_parity_prob(s1, s2, eps), 1e-9);
    }
}

TEST(Polynomials, Printing) {
    EXPECT_EQ(marginal_polynomial(5).to_string(), "5e - 20e^2 + 40e^3 - 40e^4 + 16e^5");
    EXPECT_EQ(EpsPolynomial{}.to_string(), "0");
}

TEST(Theta, Values) {
    const auto c1 = code_supports(builtin_code("c1"), DecoderMode::General);
    EXPECT_NEAR(theta(c1[0], c1[1], 0.5), 0.0, 1e-15);
    EXPECT_NEAR(theta(c1[0], c1[1], snr_point(-10.0).epsilon), 0.0038, 1e-3);
    EXPECT_NEAR(theta(c1[0], c1[1], snr_point(3.0).epsilon), 0.1116, 1e-3);
}

TEST(Theta, NonNegativeOnRandomSupports) {
    testkit::Gen gen(53);
    for (int i = 0; i < 1000; ++i) {
        const ErrorSupport s1 = random_support(gen, 8), s2 = random_support(gen, 8);
        ASSERT_GE(theta(s1, s2, gen.real(0.0, 0.5)), -1e-15);
    }
}

TEST(Theta, FourExpressionsAgree) {
    testkit::Gen gen(54);
    for (int i = 0; i < 1000; ++i) {
        const ErrorSupport s1 = random_support(gen, 8), s2 = random_support(gen, 8);
        const double eps = gen.real(0.0, 0.5);
        const auto t = theta_four_ways(s1, s2, eps);
        const double ref = theta(s1, s2, eps);
        for (double v : t) ASSERT_NEAR(v, ref, 1e-12);
    }
}

TEST(PatternProb, MarginalConsistency) {
    testkit::Gen gen(55);
    for (int i = 0; i < 200; ++i) {
        const ErrorSupport s1 = random_support(gen, 6), s2 = random_support(gen, 6);
        const double eps = gen.real(0.0, 0.5);
        const double one = pattern_prob({s1, s2}, {1, 0}, eps) + pattern_prob({s1, s2}, {1, 1}, eps);
        ASSERT_NEAR(one, parity_one_prob(s1.size(), eps), 1e-12);
        double total = 0;
        for (std::uint8_t a : {0, 1})
            for (std::uint8_t b : {0, 1}) total += pattern_prob({s1, s2}, {a, b}, eps);
        ASSERT_NEAR(total, 1.0, 1e-12);
    }
}

TEST(PatternProb, ThreeSupportsMatchBruteForce) {
    testkit::Gen gen(56);
    for (int i = 0; i < 100; ++i) {
        std::vector<ErrorSupport> s{random_support(gen, 4), random_support(gen, 4), random_support(gen, 4)};
        const std::vector<std::uint8_t> pattern{static_cast<std::uint8_t>(gen.integer(0, 1)),
                                                static_cast<std::uint8_t>(gen.integer(0, 1)),
                                                static_cast<std::uint8_t>(gen.integer(0, 1))};
        const double eps = gen.real(0.0, 1.0);
        ASSERT_NEAR(pattern_prob(s, pattern, eps), brute_force_pattern(s, pattern, eps), 1e-12);
        ASSERT_NEAR(pattern_polynomial(s, pattern)(eps), brute_force_pattern(s, pattern, eps), 1e-9);
    }
}

TEST(PairTable, Parameterisation) {
    const auto t = pair_table(0.3, 0.4, 0.2);
    EXPECT_NEAR(t[0] + t[1] + t[2] + t[3], 1.0, 1e-15);
    EXPECT_NEAR(t[2] + t[3], 0.3, 1e-15);
    EXPECT_NEAR(t[1] + t[3], 0.4, 1e-15);
    EXPECT_THROW(pair_table(0.3, 0.4, 0.35), std::invalid_argument);
    EXPECT_THROW(pair_table(0.8, 0.9, 0.1), std::invalid_argument);
}

TEST(MonteCarloProbs, ZeroEpsilon) {
    const auto r = monte_carlo_probs(builtin_code("c1"), DecoderMode::General, 0.0, 1000, 1);
    EXPECT_EQ(r.alpha1.value, 0.0);
    EXPECT_EQ(r.alpha2.value, 0.0);
    EXPECT_EQ(r.alpha11.value, 0.0);
    EXPECT_THROW(monte_carlo_probs(builtin_code("c1"), DecoderMode::General, 0.1, 0, 1), std::invalid_argument);
}

TEST(MonteCarloProbs, C1AtZeroDb) {
    const double eps = snr_point(0.0).epsilon;
    const auto r = monte_carlo_probs(builtin_code("c1"), DecoderMode::General, eps, 1000000, 2);
    EXPECT_NEAR(r.alpha1.value, 0.4259, 3 * r.alpha1.std_error + 5e-5);
    const auto s = code_supports(builtin_code("c1"), DecoderMode::General);
    const ParityPoint exact = parity_point(s, eps);
    EXPECT_NEAR(r.alpha1.value, exact.alpha1, 3 * r.alpha1.std_error);
    EXPECT_NEAR(r.alpha2.value, exact.alpha2, 3 * r.alpha2.std_error);
    EXPECT_NEAR(r.alpha11.value, exact.alpha11, 3 * r.alpha11.std_error);
}

TEST(MonteCarloProbs, QliModeC2) {
    const double eps = snr_point(2.0).epsilon;
    const auto r = monte_carlo_probs(builtin_code("c2"), DecoderMode::Qli, eps, 400000, 3);
    const ParityPoint exact = parity_point(code_supports(builtin_code("c2"), DecoderMode::Qli), eps);
    EXPECT_NEAR(r.alpha1.value, exact.alpha1, 3 * r.alpha1.std_error);
    EXPECT_NEAR(r.alpha2.value, exact.alpha2, 3 * r.alpha2.std_error);
    EXPECT_NEAR(r.alpha11.value, exact.alpha11, 3 * r.alpha11.std_error);
}
