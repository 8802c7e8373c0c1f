// SPDX-License-Identifier: Apache-2.0

#include "sstkf/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sstkf {

BinaryPoly BinaryPoly::monomial(int j) {
    if (j < 0 || j > kMaxDegree) throw std::out_of_range("monomial degree out of range");
    return BinaryPoly{std::uint64_t{1} << j};
}

BinaryPoly BinaryPoly::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty polynomial string");
    if (text.size() > static_cast<std::size_t>(kMaxDegree) + 1) {
        throw std::invalid_argument("polynomial string longer than 64 coefficients");
    }
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < text.size(); ++j) {
        switch (text[j]) {
            case '0': break;
            case '1': bits |= std::uint64_t{1} << j; break;
            default: throw std::invalid_argument("polynomial string must contain only '0' and '1'");
        }
    }
    return BinaryPoly{bits};
}

std::string BinaryPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    const int deg = degree();
    out.reserve(static_cast<std::size_t>(deg) + 1);
    for (int j = 0; j <= deg; ++j) out.push_back(coeff(j) ? '1' : '0');
    return out;
}

std::string BinaryPoly::to_expression() const {
    if (is_zero()) return "0";
    std::string out;
    for (int j = 0; j <= kMaxDegree; ++j) {
        if (!coeff(j)) continue;
        if (!out.empty()) out += '+';
        if (j == 0) out += '1';
        else if (j == 1) out += 'D';
        else out += "D^" + std::to_string(j);
    }
    return out;
}

int BinaryPoly::degree() const {
    if (is_zero()) throw std::domain_error("degree of the zero polynomial is undefined");
    return kMaxDegree - std::countl_zero(bits_);
}

int BinaryPoly::weight() const { return std::popcount(bits_); }

BinaryPoly poly_mul(BinaryPoly a, BinaryPoly b) {
    if (a.is_zero() || b.is_zero()) return BinaryPoly{};
    if (a.degree() + b.degree() > BinaryPoly::kMaxDegree) {
        throw std::overflow_error("polynomial product exceeds degree 63");
    }
    std::uint64_t acc = 0;
    std::uint64_t x = a.bits();
    const std::uint64_t y = b.bits();
    for (int j = 0; x != 0; ++j, x >>= 1) {
        if (x & 1u) acc ^= y << j;
    }
    return BinaryPoly{acc};
}

BinaryPolyMatrix::BinaryPolyMatrix(int rows, int cols)
    : BinaryPolyMatrix(rows, cols, std::vector<BinaryPoly>(static_cast<std::size_t>(rows) * cols)) {}

BinaryPolyMatrix::BinaryPolyMatrix(int rows, int cols, std::vector<BinaryPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
        throw std::invalid_argument("entry count does not match rows * cols");
    }
}

BinaryPolyMatrix BinaryPolyMatrix::identity(int n) {
    BinaryPolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = BinaryPoly::one();
    return m;
}

BinaryPolyMatrix BinaryPolyMatrix::row(std::vector<BinaryPoly> entries) {
    const int n = static_cast<int>(entries.size());
    return BinaryPolyMatrix(1, n, std::move(entries));
}

BinaryPolyMatrix BinaryPolyMatrix::column(std::vector<BinaryPoly> entries) {
    const int n = static_cast<int>(entries.size());
    return BinaryPolyMatrix(n, 1, std::move(entries));
}

BinaryPoly& BinaryPolyMatrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index out of range");
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

const BinaryPoly& BinaryPolyMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index out of range");
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
}

int BinaryPolyMatrix::max_degree() const {
    int best = -1;
    for (const auto& p : entries_) {
        if (!p.is_zero()) best = std::max(best, p.degree());
    }
    if (best < 0) throw std::domain_error("max_degree of an all-zero matrix");
    return best;
}

BinaryPolyMatrix polymat_mul(const BinaryPolyMatrix& a, const BinaryPolyMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("polymat_mul: dimension mismatch");
    BinaryPolyMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            BinaryPoly acc;
            for (int k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            out.at(i, j) = acc;
        }
    }
    return out;
}

bool verify_right_inverse(const BinaryPolyMatrix& g, const BinaryPolyMatrix& ginv) {
    if (g.cols() != ginv.rows() || g.rows() != ginv.cols()) {
        throw std::invalid_argument("verify_right_inverse: G is k0 x n0, Ginv must be n0 x k0");
    }
    return polymat_mul(g, ginv) == BinaryPolyMatrix::identity(g.rows());
}

int column_term_count(const BinaryPolyMatrix& m, int col) {
    if (col < 0 || col >= m.cols()) throw std::out_of_range("column index out of range");
    int total = 0;
    for (int r = 0; r < m.rows(); ++r) total += m.at(r, col).weight();
    return total;
}

std::vector<std::uint8_t> apply_poly(BinaryPoly p, const std::vector<std::uint8_t>& seq) {
    std::vector<std::uint8_t> out(seq.size(), 0);
    if (p.is_zero()) return out;
    const int deg = p.degree();
    for (std::size_t k = 0; k < seq.size(); ++k) {
        std::uint8_t acc = 0;
        for (int j = 0; j <= deg && static_cast<std::size_t>(j) <= k; ++j) {
            if (p.coeff(j)) acc ^= seq[k - j];
        }
        out[k] = acc & 1u;
    }
    return out;
}

}  // namespace sstkf
