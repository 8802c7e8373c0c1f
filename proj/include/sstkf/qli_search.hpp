// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive search over the QLI family G = (1 + D g', 1 + D + D g') with
// g' = c_1 D + ... + c_{nu-2} D^{nu-2} + D^{nu-1}, comparing how many error
// terms feed each main-decoder symbol under the general and QLI pre-inverses.

#pragma once

#include <span>
#include <vector>

#include "sstkf/convcode.hpp"

namespace sstkf {

enum class HeuristicVerdict { Holds, Counterexample, Indeterminate };

std::string_view to_string(HeuristicVerdict v);

/// Compares the sorted pairs (m1a, m2a) and (m1b, m2b). A smaller count
/// means a smaller error probability, so (m^b <= m^a) predicts
/// tr(Sigma_x') <= tr(Sigma_x), and (m^a <= m^b, not equal) predicts the
/// reverse. Mixed orderings are indeterminate.
HeuristicVerdict heuristic_verdict(int m1a, int m2a, int m1b, int m2b);

struct QliSearchRow {
    int nu = 0;
    unsigned c_bits = 0;  // c_1 is the most significant of nu - 2 bits
    BinaryPoly gprime;
    int m1a = 0, m2a = 0, m1b = 0, m2b = 0;
    HeuristicVerdict verdict = HeuristicVerdict::Indeterminate;

    bool counterexample() const { return verdict == HeuristicVerdict::Counterexample; }
    /// c_1 .. c_{nu-2}.
    std::vector<std::uint8_t> coefficients() const;
};

/// Throws std::invalid_argument unless 3 <= nu <= 12 and c_bits < 2^(nu-2).
BinaryPoly qli_gprime(int nu, unsigned c_bits);

QliSearchRow evaluate_qli(int nu, unsigned c_bits);

/// All 2^(nu-2) rows in ascending c_bits order.
std::vector<QliSearchRow> enumerate_qli(int nu);

struct TraceComparison {
    double ebn0_db = 0.0;
    double half_tr_sigma_x = 0.0;
    double half_tr_sigma_x_prime = 0.0;
    /// tr(Sigma_x) < tr(Sigma_x'), decided on the unrounded power sums.
    bool reversed = false;
};

/// Exact traces from support sizes: 1/2 tr = 1 - (q^{2 m1} + q^{2 m2}) / 2,
/// q = 1 - 2 eps. Throws std::invalid_argument for a non-QLI code.
std::vector<TraceComparison> trace_compare(const ConvCode& code, std::span<const double> ebn0_db);
std::vector<TraceComparison> trace_compare(const QliSearchRow& row, std::span<const double> ebn0_db);

/// Trace comparison at a given crossover probability.
TraceComparison trace_compare_at(int m1a, int m2a, int m1b, int m2b, double eps);

}  // namespace sstkf
