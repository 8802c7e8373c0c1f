// SPDX-License-Identifier: Apache-2.0

#include "sstkf/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "sstkf/channel.hpp"
#include "sstkf/covar_mi.hpp"
#include "sstkf/parity_prob.hpp"
#include "sstkf/qli_search.hpp"
#include "sstkf/sweep.hpp"

namespace sstkf {

std::size_t Table::column(std::string_view name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw std::out_of_range("no column '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - header.begin());
}

double Table::number(std::size_t row, std::string_view name) const {
    const Cell& c = rows.at(row).at(column(name));
    if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
    if (const auto* d = std::get_if<double>(&c)) return *d;
    throw std::invalid_argument("column '" + std::string(name) + "' is not numeric");
}

namespace {

std::string format_real(double v) {
    if (v == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string format_cell(const Cell& c) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&c)) return format_real(*d);
    const auto& s = std::get<std::string>(c);
    if (s.find_first_of(",\n\"") != std::string::npos) throw std::invalid_argument("CSV cell contains a separator");
    return s;
}

Cell parse_cell(std::string_view s) {
    if (s.empty()) return std::string();
    std::int64_t i = 0;
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, i);
    if (ec == std::errc() && p == end) return i;
    double d = 0.0;
    auto [q, ec2] = std::from_chars(s.data(), end, d);
    if (ec2 == std::errc() && q == end) return d;
    return std::string(s);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_real(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double d = 0.0;
    const char* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, d);
    if (s.empty() || ec != std::errc() || p != end || !std::isfinite(d)) {
        throw std::invalid_argument("not a finite number: '" + std::string(s) + "'");
    }
    return d;
}

}  // namespace

std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.header.size(); ++i) out += (i ? "," : "") + t.header[i];
    out += '\n';
    for (const auto& row : t.rows) {
        if (row.size() != t.header.size()) throw std::invalid_argument("row width does not match the header");
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_cell(row[i]);
        out += '\n';
    }
    return out;
}

Table parse_csv(std::string_view text) {
    Table t;
    auto lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw std::invalid_argument("CSV has no header");
    for (auto h : split(lines[0], ',')) t.header.emplace_back(h);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split(lines[i], ',');
        if (cells.size() != t.header.size()) throw std::invalid_argument("CSV row " + std::to_string(i) + " has the wrong width");
        std::vector<Cell> row;
        for (auto c : cells) row.push_back(parse_cell(c));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string to_json(const Table& t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, double>) obj[t.header[i]] = parse_real(format_real(v));
                    else obj[t.header[i]] = v;
                },
                row[i]);
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::vector<double> parse_db_grid(std::string_view text) {
    std::vector<double> grid;
    if (text.find_first_not_of(' ') == std::string_view::npos) return grid;
    for (auto token : split(text, ',')) {
        const std::size_t dots = token.find("..");
        if (dots == std::string_view::npos) {
            grid.push_back(parse_real(token));
            continue;
        }
        const double a = parse_real(token.substr(0, dots));
        std::string_view rest = token.substr(dots + 2);
        double step = 1.0;
        if (const std::size_t colon = rest.find(':'); colon != std::string_view::npos) {
            step = parse_real(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        const double b = parse_real(rest);
        if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
        if (b < a) throw std::invalid_argument("grid range must be ascending");
        const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9));
        if (count > 100000) throw std::invalid_argument("grid range has too many points");
        for (long i = 0; i <= count; ++i) grid.push_back(std::round((a + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
    return grid;
}

namespace {

Table sigma_x_table(const ConvCode& code, DecoderMode mode) {
    const bool qli = mode == DecoderMode::Qli;
    Table t;
    t.header = qli ? std::vector<std::string>{"ebn0_db", "beta1", "sigma1p_sq", "beta2", "sigma2p_sq", "half_tr_sigma_x_prime"}
                   : std::vector<std::string>{"ebn0_db", "alpha1", "sigma1_sq", "alpha2", "sigma2_sq", "theta12", "half_tr_sigma_x"};
    const CodeAnalysis a(code, mode);
    for (const auto& r : a.sweep(default_db_grid())) {
        std::vector<Cell> row{r.ebn0_db, r.probs.alpha1, r.sigma1_sq, r.probs.alpha2, r.sigma2_sq};
        if (!qli) row.emplace_back(r.probs.theta12);
        row.emplace_back(r.half_tr_sigma_x);
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table eigen_table(const ConvCode& code) {
    Table t;
    t.header = {"ebn0_db", "rho", "lambda_t1", "lambda_t2", "rho_lambda_t1", "rho_lambda_max"};
    const CodeAnalysis a(code, DecoderMode::General);
    for (const auto& r : a.sweep(default_db_grid())) {
        t.rows.push_back({r.ebn0_db, r.rho, r.eigen.lambda_tilde1, r.eigen.lambda_tilde2, r.rho_lambda_tilde1,
                          r.eigen.rho_lambda_tilde_max});
    }
    return t;
}

Table bounds_table(const ConvCode& code) {
    Table t;
    t.header = {"ebn0_db", "rho_half_tr_sigma_c", "half_tr_sigma_c", "inv_1p_rho", "gauss_bound", "log1p_rho_over_rho",
                "half_tr_sigma_x"};
    const CodeAnalysis a(code, DecoderMode::General);
    for (const auto& r : a.sweep(default_db_grid())) {
        t.rows.push_back({r.ebn0_db, r.rho_half_tr_sigma_c, r.half_tr_sigma_c, r.inv_1p_rho, r.gauss_bound,
                          r.log1p_rho_over_rho, r.half_tr_sigma_x});
    }
    return t;
}

Table term_count_table(int nu) {
    Table t;
    for (int i = 1; i <= nu - 2; ++i) t.header.push_back("c" + std::to_string(i));
    for (const char* h : {"m1a", "m2a", "m1b", "m2b", "counterexample"}) t.header.emplace_back(h);
    for (const auto& r : enumerate_qli(nu)) {
        std::vector<Cell> row;
        for (auto c : r.coefficients()) row.emplace_back(static_cast<std::int64_t>(c));
        for (int m : {r.m1a, r.m2a, r.m1b, r.m2b}) row.emplace_back(static_cast<std::int64_t>(m));
        row.emplace_back(static_cast<std::int64_t>(r.counterexample()));
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace

Table reproduction_table(int id) {
    switch (id) {
        case 1: return sigma_x_table(builtin_code("c1"), DecoderMode::General);
        case 2: return sigma_x_table(builtin_code("c2"), DecoderMode::General);
        case 3: return eigen_table(builtin_code("c1"));
        case 4: return eigen_table(builtin_code("c2"));
        case 5: return bounds_table(builtin_code("c1"));
        case 6: return bounds_table(builtin_code("c2"));
        case 7: return sigma_x_table(builtin_code("c1"), DecoderMode::Qli);
        case 8: return sigma_x_table(builtin_code("c2"), DecoderMode::Qli);
        case 9: return term_count_table(5);
        case 10: return term_count_table(6);
        default: throw std::invalid_argument("table id must be 1..10");
    }
}

TableKind reproduction_table_kind(int id) {
    switch (id) {
        case 1: case 2: return TableKind::SigmaX;
        case 3: case 4: return TableKind::Eigen;
        case 5: case 6: return TableKind::Bounds;
        case 7: case 8: return TableKind::SigmaXPrime;
        case 9: case 10: return TableKind::TermCounts;
        default: throw std::invalid_argument("table id must be 1..10");
    }
}

Table curves_table(const ConvCode& code, DecoderMode mode, const std::vector<double>& grid) {
    Table t;
    t.header = {"ebn0_db", "rho", "half_tr_sigma_c", "gauss_bound", "half_tr_sigma_x", "inv_1p_rho",
                "log1p_rho_over_rho", "two_I_over_rho", "lambda_t1", "lambda_t2", "rho_lambda_max"};
    const CodeAnalysis a(code, mode);
    for (const auto& r : a.sweep(grid)) {
        t.rows.push_back({r.ebn0_db, r.rho, r.half_tr_sigma_c, r.gauss_bound, r.half_tr_sigma_x, r.inv_1p_rho,
                          r.log1p_rho_over_rho, r.two_I_over_rho, r.eigen.lambda_tilde1, r.eigen.lambda_tilde2,
                          r.eigen.rho_lambda_tilde_max});
    }
    return t;
}

Table alpha_values_table(const ConvCode& code, DecoderMode mode, const std::vector<double>& grid) {
    const bool qli = mode == DecoderMode::Qli;
    Table t;
    t.header = qli ? std::vector<std::string>{"ebn0_db", "epsilon", "beta1", "beta2", "beta11", "theta12p"}
                   : std::vector<std::string>{"ebn0_db", "epsilon", "alpha1", "alpha2", "alpha11", "theta12"};
    const auto supports = code_supports(code, mode);
    for (double db : grid) {
        const ParityPoint p = parity_point(supports, snr_point(db, code.rate()).epsilon);
        t.rows.push_back({db, p.epsilon, p.alpha1, p.alpha2, p.alpha11, p.theta12});
    }
    return t;
}

Table alpha_polynomial_table(const ConvCode& code, DecoderMode mode) {
    const bool qli = mode == DecoderMode::Qli;
    const auto s = code_supports(code, mode);
    const std::pair<std::string, EpsPolynomial> polys[] = {
        {qli ? "beta1" : "alpha1", marginal_polynomial(s[0].size())},
        {qli ? "beta2" : "alpha2", marginal_polynomial(s[1].size())},
        {qli ? "beta11" : "alpha11", joint_polynomial(s[0], s[1])},
    };
    Table t;
    t.header = {"quantity", "power", "coefficient"};
    for (const auto& [name, poly] : polys) {
        const auto& c = poly.coefficients();
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] != 0) t.rows.push_back({name, static_cast<std::int64_t>(j), c[j]});
        }
    }
    return t;
}

Table search_table(int nu, const std::vector<double>& grid) {
    Table t;
    t.header = {"c_bits", "m1a", "m2a", "m1b", "m2b", "heuristic_counterexample", "heuristic_verdict",
                "exact_counterexample_snrs"};
    for (const auto& r : enumerate_qli(nu)) {
        std::string snrs;
        for (const auto& p : trace_compare(r, grid)) {
            if (!p.reversed) continue;
            if (!snrs.empty()) snrs += ';';
            snrs += format_real(p.ebn0_db);
        }
        std::string bits;
        for (auto c : r.coefficients()) bits += static_cast<char>('0' + c);
        t.rows.push_back({bits, static_cast<std::int64_t>(r.m1a), static_cast<std::int64_t>(r.m2a),
                          static_cast<std::int64_t>(r.m1b), static_cast<std::int64_t>(r.m2b),
                          static_cast<std::int64_t>(r.counterexample()), std::string(to_string(r.verdict)), snrs});
    }
    return t;
}

Table simulation_table(const std::vector<SimulationResult>& results) {
    Table t;
    t.header = {"ebn0_db",      "branches",     "pre_ber",       "post_ber",  "emp_alpha1", "emp_alpha2",
                "emp_alpha11",  "pre_ber_se",   "post_ber_se",   "alpha1_se", "alpha2_se",  "alpha11_se",
                "sigma_r11",    "sigma_r12",    "sigma_r22",     "sigma_r11_se", "sigma_r12_se", "sigma_r22_se"};
    for (const auto& r : results) {
        t.rows.push_back({r.ebn0_db, static_cast<std::int64_t>(r.branches), r.pre_ber.value, r.post_ber.value,
                          r.alpha1.value, r.alpha2.value, r.alpha11.value, r.pre_ber.std_error, r.post_ber.std_error,
                          r.alpha1.std_error, r.alpha2.std_error, r.alpha11.std_error, r.sigma_r(0, 0), r.sigma_r(0, 1),
                          r.sigma_r(1, 1), r.sigma_r_se(0, 0), r.sigma_r_se(0, 1), r.sigma_r_se(1, 1)});
    }
    return t;
}

namespace {

// Printed values carry 6 significant digits.
bool close(double a, double b) { return std::abs(a - b) <= 2e-5 * std::max({1.0, std::abs(a), std::abs(b)}); }

struct Checker {
    const Table& t;
    std::vector<std::string> problems;

    void require(bool ok, std::size_t row, const std::string& what) {
        if (!ok) problems.push_back("row " + std::to_string(row) + ": " + what);
    }
    double n(std::size_t row, std::string_view col) const { return t.number(row, col); }
};

void check_probability_table(Checker& c, bool qli) {
    const char* a1 = qli ? "beta1" : "alpha1";
    const char* a2 = qli ? "beta2" : "alpha2";
    const char* s1 = qli ? "sigma1p_sq" : "sigma1_sq";
    const char* s2 = qli ? "sigma2p_sq" : "sigma2_sq";
    const char* tr = qli ? "half_tr_sigma_x_prime" : "half_tr_sigma_x";
    for (std::size_t i = 0; i < c.t.rows.size(); ++i) {
        for (const char* a : {a1, a2}) c.require(c.n(i, a) >= 0.0 && c.n(i, a) <= 0.5, i, std::string(a) + " outside [0, 1/2]");
        c.require(close(c.n(i, s1), 4 * c.n(i, a1) * (1 - c.n(i, a1))), i, "sigma1^2 != 4 a (1 - a)");
        c.require(close(c.n(i, s2), 4 * c.n(i, a2) * (1 - c.n(i, a2))), i, "sigma2^2 != 4 a (1 - a)");
        c.require(close(c.n(i, tr), 0.5 * (c.n(i, s1) + c.n(i, s2))), i, "half trace mismatch");
        if (!qli) c.require(c.n(i, "theta12") >= 0.0, i, "theta12 negative");
    }
}

void check_chain(Checker& c, bool has_two_i) {
    for (std::size_t i = 0; i < c.t.rows.size(); ++i) {
        const double sc = c.n(i, "half_tr_sigma_c"), g = c.n(i, "gauss_bound"), sx = c.n(i, "half_tr_sigma_x");
        c.require(sc < g && g < sx, i, "strict chain 1/2 tr(Sc) < gauss < 1/2 tr(Sx) fails");
        c.require(sc <= c.n(i, "inv_1p_rho"), i, "1/2 tr(Sc) > 1/(1+rho)");
        c.require(g <= c.n(i, "log1p_rho_over_rho"), i, "gauss > log(1+rho)/rho");
        if (has_two_i) {
            c.require(c.n(i, "two_I_over_rho") <= c.n(i, "log1p_rho_over_rho"), i, "2I/rho > log(1+rho)/rho");
            c.require(c.n(i, "rho_lambda_max") < 1.0, i, "rho lambda_max >= 1");
            c.require(c.n(i, "lambda_t1") <= c.n(i, "lambda_t2"), i, "lambda_t1 > lambda_t2");
        }
    }
}

void check_counts(Checker& c, const char* flag) {
    for (std::size_t i = 0; i < c.t.rows.size(); ++i) {
        const int m1a = static_cast<int>(c.n(i, "m1a")), m2a = static_cast<int>(c.n(i, "m2a"));
        const int m1b = static_cast<int>(c.n(i, "m1b")), m2b = static_cast<int>(c.n(i, "m2b"));
        for (int m : {m1a, m2a, m1b, m2b}) c.require(m > 0, i, "nonpositive term count");
        const bool expect = heuristic_verdict(m1a, m2a, m1b, m2b) == HeuristicVerdict::Counterexample;
        c.require((c.n(i, flag) != 0.0) == expect, i, "counterexample flag disagrees with the counts");
    }
}

}  // namespace

std::vector<std::string> validate(const Table& t, TableKind kind) {
    Checker c{t, {}};
    try {
        switch (kind) {
            case TableKind::SigmaX: check_probability_table(c, false); break;
            case TableKind::SigmaXPrime: check_probability_table(c, true); break;
            case TableKind::Eigen:
                for (std::size_t i = 0; i < t.rows.size(); ++i) {
                    c.require(c.n(i, "rho_lambda_max") < 1.0, i, "rho lambda_max >= 1");
                    c.require(c.n(i, "lambda_t1") <= c.n(i, "lambda_t2"), i, "lambda_t1 > lambda_t2");
                    c.require(close(c.n(i, "rho_lambda_t1"), c.n(i, "rho") * c.n(i, "lambda_t1")), i, "rho lambda_t1 mismatch");
                }
                break;
            case TableKind::Bounds: check_chain(c, false); break;
            case TableKind::Curves: check_chain(c, true); break;
            case TableKind::TermCounts: check_counts(c, "counterexample"); break;
            case TableKind::Search: check_counts(c, "heuristic_counterexample"); break;
            case TableKind::Alpha:
                for (std::size_t i = 0; i < t.rows.size(); ++i) {
                    const double a1 = c.n(i, t.header[2]), a2 = c.n(i, t.header[3]), a11 = c.n(i, t.header[4]);
                    c.require(a1 >= 0 && a1 <= 0.5 && a2 >= 0 && a2 <= 0.5, i, "marginal outside [0, 1/2]");
                    c.require(a11 >= 0 && a11 <= std::min(a1, a2) + 1e-6, i, "joint exceeds a marginal");
                    c.require(c.n(i, t.header[5]) >= 0.0, i, "theta negative");
                    c.require(close(c.n(i, t.header[5]), a11 - a1 * a2), i, "theta != joint - product");
                }
                break;
            case TableKind::Simulation:
                for (std::size_t i = 0; i < t.rows.size(); ++i) {
                    for (const char* col : {"pre_ber", "post_ber", "emp_alpha1", "emp_alpha2", "emp_alpha11"}) {
                        c.require(c.n(i, col) >= 0.0 && c.n(i, col) <= 1.0, i, std::string(col) + " outside [0, 1]");
                    }
                    c.require(c.n(i, "emp_alpha11") <= std::min(c.n(i, "emp_alpha1"), c.n(i, "emp_alpha2")), i,
                              "joint frequency exceeds a marginal");
                }
                break;
            case TableKind::Other: break;
        }
    } catch (const std::exception& e) {
        c.problems.push_back(std::string("malformed table: ") + e.what());
    }
    return c.problems;
}

}  // namespace sstkf
