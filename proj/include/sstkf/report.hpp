// SPDX-License-Identifier: Apache-2.0
//
// Tabular artifacts: the reproduced tables, figure series and search
// results, their CSV/JSON encodings, and invariant validators that re-check
// emitted rows.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sstkf/convcode.hpp"
#include "sstkf/simulate.hpp"

namespace sstkf {

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    /// Throws std::out_of_range for an unknown column.
    std::size_t column(std::string_view name) const;
    double number(std::size_t row, std::string_view name) const;
};

/// Comma-separated, header row, LF endings, reals with 6 significant digits.
std::string to_csv(const Table& t);

/// Inverse of to_csv. Integers parse as int64, other numerics as double.
Table parse_csv(std::string_view text);

/// Array of row objects keyed by column name.
std::string to_json(const Table& t);

/// "4", "0,2,4", "-10..10" (step 1), "a..b:step" or a comma list of those.
/// An empty string is an empty grid. Throws std::invalid_argument.
std::vector<double> parse_db_grid(std::string_view text);

/// Tables 1..10 of the reproduction set; odd ids are C1 and even ids C2,
/// except 9 and 10, which are the nu = 5 and nu = 6 term-count searches.
/// Throws std::invalid_argument for other ids.
Table reproduction_table(int id);

/// Bound chain, eigenvalue approximations and 2 I(rho) / rho per grid point.
Table curves_table(const ConvCode& code, DecoderMode mode, const std::vector<double>& grid);

/// alpha1, alpha2, alpha11, theta12 (or the beta variants) per grid point.
Table alpha_values_table(const ConvCode& code, DecoderMode mode, const std::vector<double>& grid);

/// One row per nonzero coefficient of the exact polynomials in eps.
Table alpha_polynomial_table(const ConvCode& code, DecoderMode mode);

/// Term-count search with the exact comparison on `grid`.
Table search_table(int nu, const std::vector<double>& grid);

/// ebn0_db, branches, pre_ber, post_ber, emp_alpha1, emp_alpha2, emp_alpha11,
/// then standard errors and the empirical soft-input covariance.
Table simulation_table(const std::vector<SimulationResult>& results);

enum class TableKind { SigmaX, Eigen, Bounds, SigmaXPrime, TermCounts, Curves, Alpha, Simulation, Search, Other };

TableKind reproduction_table_kind(int id);

/// Problems found by re-checking every row; empty when all hold.
std::vector<std::string> validate(const Table& t, TableKind kind);

}  // namespace sstkf
