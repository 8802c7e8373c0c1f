// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <vector>

#include "sstkf/convcode.hpp"
#include "sstkf/gf2.hpp"
#include "support.hpp"

using namespace sstkf;

namespace {

BinaryPoly P(const char* s) { return BinaryPoly::parse(s); }

// Integer convolution reduced mod 2 afterwards.
BinaryPoly schoolbook(BinaryPoly a, BinaryPoly b) {
    std::vector<int> acc(128, 0);
    for (int i = 0; i < 64; ++i)
        for (int j = 0; j < 64; ++j)
            if (a.coeff(i) && b.coeff(j)) acc[i + j] += 1;
    std::uint64_t bits = 0;
    for (int k = 0; k < 64; ++k)
        if (acc[k] % 2) bits |= std::uint64_t{1} << k;
    return BinaryPoly{bits};
}

}  // namespace

TEST(BinaryPoly, ParseAndPrint) {
    EXPECT_EQ(P("111").bits(), 0b111u);
    EXPECT_EQ(P("101").to_expression(), "1+D^2");
    EXPECT_EQ(P("0110").to_string(), "011");
    EXPECT_EQ(BinaryPoly{}.to_string(), "0");
    EXPECT_EQ(P("1001011").to_expression(), "1+D^3+D^5+D^6");
    EXPECT_THROW(P(""), std::invalid_argument);
    EXPECT_THROW(P("12"), std::invalid_argument);
}

TEST(BinaryPoly, ZeroDegreeIsAnError) {
    EXPECT_THROW(BinaryPoly{}.degree(), std::domain_error);
    EXPECT_EQ(BinaryPoly{}.weight(), 0);
    EXPECT_EQ(P("0001").degree(), 3);
}

TEST(PolyMul, CharacteristicTwoSquare) { EXPECT_EQ(P("11") * P("11"), P("101")); }

TEST(PolyMul, Identity) {
    const BinaryPoly p = P("1101011");
    EXPECT_EQ(BinaryPoly::one() * p, p);
}

TEST(PolyMul, MatchesSchoolbookConvolution) {
    const BinaryPoly lhs = P("111");
    const BinaryPoly rhs = BinaryPoly::one() + P("01111");
    EXPECT_EQ(lhs * rhs, schoolbook(lhs, rhs));
    // Integer coefficients 1,2,3,3,3,2,1 reduce to 1+D^2+D^3+D^4+D^6.
    EXPECT_EQ(lhs * rhs, P("1011101"));
}

TEST(PolyMul, Overflow) { EXPECT_THROW(BinaryPoly::monomial(40) * BinaryPoly::monomial(30), std::overflow_error); }

TEST(PolyMul, RandomAlgebraicLaws) {
    testkit::Gen gen(11);
    for (int i = 0; i < 2000; ++i) {
        const BinaryPoly a = gen.poly(15), b = gen.poly(15), c = gen.poly(15);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * b, schoolbook(a, b));
        if (!a.is_zero() && !b.is_zero()) {
            ASSERT_EQ((a * b).degree(), a.degree() + b.degree());
        }
    }
}

TEST(PolyMatMul, InverseTimesGeneratorC1) {
    const auto g = BinaryPolyMatrix::row({P("111"), P("101")});
    const auto ginv = BinaryPolyMatrix::column({P("01"), P("11")});
    const auto expected = BinaryPolyMatrix(2, 2, {P("0111"), P("0101"), P("1001"), P("1111")});
    EXPECT_EQ(ginv * g, expected);
}

TEST(PolyMatMul, InverseTimesGeneratorC2) {
    const auto g = BinaryPolyMatrix::row({P("1001011"), P("1101011")});
    const auto ginv = BinaryPolyMatrix::column({P("101011"), P("001011")});
    // b11 = 1+D^2+D^3+D^4+D^5+D^6+D^9+D^11, b12 = 1+D+D^2+D^4+D^9+D^11,
    // b21 = D^2+D^4+D^9+D^11, b22 = D^2+D^3+D^4+D^5+D^6+D^9+D^11.
    const auto expected = BinaryPolyMatrix(
        2, 2, {P("101111100101"), P("111010000101"), P("001010000101"), P("001111100101")});
    EXPECT_EQ(ginv * g, expected);
}

TEST(PolyMatMul, IdentityLeft) {
    const auto g = BinaryPolyMatrix::row({P("111"), P("101")});
    EXPECT_EQ(BinaryPolyMatrix::identity(1) * g, g);
}

TEST(PolyMatMul, DimensionMismatch) {
    const auto g = BinaryPolyMatrix::row({P("111"), P("101")});
    EXPECT_THROW(g * g, std::invalid_argument);
}

TEST(PolyMatMul, Associative) {
    testkit::Gen gen(12);
    for (int i = 0; i < 300; ++i) {
        const int r = gen.integer(1, 3), k = gen.integer(1, 3), m = gen.integer(1, 3), c = gen.integer(1, 3);
        const auto a = gen.polymat(r, k, 8), b = gen.polymat(k, m, 8), d = gen.polymat(m, c, 8);
        ASSERT_EQ((a * b) * d, a * (b * d));
    }
}

TEST(VerifyRightInverse, KnownCases) {
    EXPECT_TRUE(verify_right_inverse(BinaryPolyMatrix::row({P("111"), P("101")}),
                                     BinaryPolyMatrix::column({P("01"), P("11")})));
    EXPECT_TRUE(verify_right_inverse(BinaryPolyMatrix::row({P("1"), P("1")}),
                                     BinaryPolyMatrix::column({P("1"), P("0")})));
    testkit::Gen gen(13);
    const auto dd = BinaryPolyMatrix::row({P("01"), P("01")});
    for (int i = 0; i < 200; ++i) {
        EXPECT_FALSE(verify_right_inverse(dd, gen.polymat(2, 1, 6)));
    }
}

TEST(VerifyRightInverse, QliFamilyUpToDegreeTen) {
    // All g' of degree <= 10 with no constant term.
    for (std::uint64_t bits = 2; bits < (1u << 11); bits += 2) {
        const BinaryPoly gp{bits};
        const QliCode code = make_qli(gp);
        ASSERT_TRUE(verify_right_inverse(code.base.g(), right_inverse_qli(gp))) << gp.to_expression();
    }
}

TEST(ColumnTermCount, Counts) {
    const auto g = BinaryPolyMatrix::row({P("111"), P("101")});
    const auto ginv = BinaryPolyMatrix::column({P("01"), P("11")});
    const auto block = ginv * g;
    EXPECT_EQ(column_term_count(block, 0), 5);
    EXPECT_EQ(column_term_count(block, 1), 6);
    EXPECT_EQ(column_term_count(BinaryPolyMatrix(2, 2), 1), 0);
    EXPECT_THROW(column_term_count(block, 2), std::out_of_range);

    const QliCode q = make_qli(P("01111"));
    const auto qli_block = BinaryPolyMatrix::column({BinaryPoly::one(), BinaryPoly::one()}) * q.base.g();
    EXPECT_EQ(column_term_count(qli_block, 1), 12);
}

TEST(ApplyPoly, DelayOperator) {
    const std::vector<std::uint8_t> seq{1, 0, 0, 1, 0};
    EXPECT_EQ(apply_poly(P("01"), seq), (std::vector<std::uint8_t>{0, 1, 0, 0, 1}));
    EXPECT_EQ(apply_poly(P("11"), seq), (std::vector<std::uint8_t>{1, 1, 0, 1, 1}));
    EXPECT_EQ(apply_poly(BinaryPoly{}, seq), (std::vector<std::uint8_t>(5, 0)));
}
