// SPDX-License-Identifier: Apache-2.0

#include "sstkf/qli_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sstkf/channel.hpp"
#include "sstkf/parity_prob.hpp"

namespace sstkf {

std::string_view to_string(HeuristicVerdict v) {
    switch (v) {
        case HeuristicVerdict::Holds: return "holds";
        case HeuristicVerdict::Counterexample: return "counterexample";
        case HeuristicVerdict::Indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

HeuristicVerdict heuristic_verdict(int m1a, int m2a, int m1b, int m2b) {
    const auto [a_lo, a_hi] = std::minmax(m1a, m2a);
    const auto [b_lo, b_hi] = std::minmax(m1b, m2b);
    if (b_lo <= a_lo && b_hi <= a_hi) return HeuristicVerdict::Holds;
    if (a_lo <= b_lo && a_hi <= b_hi) return HeuristicVerdict::Counterexample;
    return HeuristicVerdict::Indeterminate;
}

std::vector<std::uint8_t> QliSearchRow::coefficients() const {
    std::vector<std::uint8_t> c(static_cast<std::size_t>(nu - 2));
    for (int i = 0; i < nu - 2; ++i) c[static_cast<std::size_t>(i)] = (c_bits >> (nu - 3 - i)) & 1u;
    return c;
}

BinaryPoly qli_gprime(int nu, unsigned c_bits) {
    if (nu < 3 || nu > 12) throw std::invalid_argument("nu must be in 3..12");
    if (c_bits >= (1u << (nu - 2))) throw std::invalid_argument("c_bits has more than nu - 2 bits");
    std::uint64_t bits = std::uint64_t{1} << (nu - 1);
    for (int i = 1; i <= nu - 2; ++i) {
        if ((c_bits >> (nu - 2 - i)) & 1u) bits |= std::uint64_t{1} << i;
    }
    return BinaryPoly{bits};
}

namespace {

std::array<int, 2> support_sizes(const ConvCode& code, DecoderMode mode) {
    const auto s = code_supports(code, mode);
    return {static_cast<int>(s[0].size()), static_cast<int>(s[1].size())};
}

}  // namespace

QliSearchRow evaluate_qli(int nu, unsigned c_bits) {
    QliSearchRow row;
    row.nu = nu;
    row.c_bits = c_bits;
    row.gprime = qli_gprime(nu, c_bits);
    const ConvCode code = make_qli(row.gprime).base;
    const auto a = support_sizes(code, DecoderMode::General);
    const auto b = support_sizes(code, DecoderMode::Qli);
    row.m1a = a[0];
    row.m2a = a[1];
    row.m1b = b[0];
    row.m2b = b[1];
    row.verdict = heuristic_verdict(row.m1a, row.m2a, row.m1b, row.m2b);
    return row;
}

std::vector<QliSearchRow> enumerate_qli(int nu) {
    if (nu < 3 || nu > 12) throw std::invalid_argument("nu must be in 3..12");
    std::vector<QliSearchRow> rows;
    const unsigned count = 1u << (nu - 2);
    rows.reserve(count);
    for (unsigned c = 0; c < count; ++c) rows.push_back(evaluate_qli(nu, c));
    return rows;
}

TraceComparison trace_compare_at(int m1a, int m2a, int m1b, int m2b, double eps) {
    if (!(eps >= 0.0 && eps <= 0.5)) throw std::invalid_argument("eps must lie in [0, 1/2]");
    const double q = 1.0 - 2.0 * eps;
    auto p = [q](int m) { return std::pow(q, 2 * m); };
    const double sum_a = p(m1a) + p(m2a);
    const double sum_b = p(m1b) + p(m2b);
    TraceComparison t;
    t.half_tr_sigma_x = 1.0 - 0.5 * sum_a;
    t.half_tr_sigma_x_prime = 1.0 - 0.5 * sum_b;
    t.reversed = sum_a > sum_b;
    return t;
}

namespace {

std::vector<TraceComparison> compare_grid(int m1a, int m2a, int m1b, int m2b, std::span<const double> grid) {
    std::vector<TraceComparison> out;
    out.reserve(grid.size());
    for (double db : grid) {
        TraceComparison t = trace_compare_at(m1a, m2a, m1b, m2b, snr_point(db).epsilon);
        t.ebn0_db = db;
        out.push_back(t);
    }
    return out;
}

}  // namespace

std::vector<TraceComparison> trace_compare(const ConvCode& code, std::span<const double> ebn0_db) {
    if (!code.is_qli()) throw std::invalid_argument("trace_compare needs a quick-look-in code");
    const auto a = support_sizes(code, DecoderMode::General);
    const auto b = support_sizes(code, DecoderMode::Qli);
    return compare_grid(a[0], a[1], b[0], b[1], ebn0_db);
}

std::vector<TraceComparison> trace_compare(const QliSearchRow& row, std::span<const double> ebn0_db) {
    return compare_grid(row.m1a, row.m2a, row.m1b, row.m2b, ebn0_db);
}

}  // namespace sstkf
