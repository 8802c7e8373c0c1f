// SPDX-License-Identifier: Apache-2.0
//
// Polynomials over GF(2) in the delay operator D, and matrices of them.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sstkf {

/// Polynomial over GF(2), packed little-endian in D: bit j is the coefficient
/// of D^j. Degrees up to 63 are representable.
class BinaryPoly {
public:
    static constexpr int kMaxDegree = 63;

    constexpr BinaryPoly() = default;
    constexpr explicit BinaryPoly(std::uint64_t bits) : bits_(bits) {}

    static constexpr BinaryPoly one() { return BinaryPoly{1}; }
    static BinaryPoly monomial(int j);

    /// Parses the text form: coefficient string, lowest degree first
    /// ("111" = 1+D+D^2). Throws std::invalid_argument on malformed input.
    static BinaryPoly parse(std::string_view text);

    /// Inverse of parse(); the zero polynomial prints as "0".
    std::string to_string() const;

    /// Human-readable form such as "1+D+D^3".
    std::string to_expression() const;

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }
    constexpr bool coeff(int j) const { return j >= 0 && j <= kMaxDegree && ((bits_ >> j) & 1u); }

    /// Throws std::domain_error for the zero polynomial.
    int degree() const;

    /// Number of nonzero coefficients.
    int weight() const;

    friend constexpr BinaryPoly operator+(BinaryPoly a, BinaryPoly b) { return BinaryPoly{a.bits_ ^ b.bits_}; }
    BinaryPoly& operator+=(BinaryPoly other) {
        bits_ ^= other.bits_;
        return *this;
    }
    friend constexpr bool operator==(BinaryPoly a, BinaryPoly b) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Carry-free product. Throws std::overflow_error if the result degree
/// would exceed BinaryPoly::kMaxDegree.
BinaryPoly poly_mul(BinaryPoly a, BinaryPoly b);

inline BinaryPoly operator*(BinaryPoly a, BinaryPoly b) { return poly_mul(a, b); }

class BinaryPolyMatrix {
public:
    BinaryPolyMatrix() = default;
    BinaryPolyMatrix(int rows, int cols);
    BinaryPolyMatrix(int rows, int cols, std::vector<BinaryPoly> entries);

    static BinaryPolyMatrix identity(int n);
    static BinaryPolyMatrix row(std::vector<BinaryPoly> entries);
    static BinaryPolyMatrix column(std::vector<BinaryPoly> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BinaryPoly& at(int r, int c);
    const BinaryPoly& at(int r, int c) const;

    const std::vector<BinaryPoly>& entries() const { return entries_; }

    /// Largest entry degree; zero entries are skipped. Throws
    /// std::domain_error when every entry is zero.
    int max_degree() const;

    friend bool operator==(const BinaryPolyMatrix&, const BinaryPolyMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BinaryPoly> entries_;
};

/// Matrix product with XOR accumulation. Throws std::invalid_argument when
/// A.cols() != B.rows().
BinaryPolyMatrix polymat_mul(const BinaryPolyMatrix& a, const BinaryPolyMatrix& b);

inline BinaryPolyMatrix operator*(const BinaryPolyMatrix& a, const BinaryPolyMatrix& b) { return polymat_mul(a, b); }

/// True iff G * Ginv is the k0 x k0 identity. G must be k0 x n0 and Ginv
/// n0 x k0, otherwise std::invalid_argument.
bool verify_right_inverse(const BinaryPolyMatrix& g, const BinaryPolyMatrix& ginv);

/// Sum of the weights of the entries in column `col`.
int column_term_count(const BinaryPolyMatrix& m, int col);

/// Applies p(D) as a delay operator to a bit stream with zero history:
/// out[k] = XOR_j p_j * seq[k-j].
std::vector<std::uint8_t> apply_poly(BinaryPoly p, const std::vector<std::uint8_t>& seq);

}  // namespace sstkf
