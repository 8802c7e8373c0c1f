// SPDX-License-Identifier: Apache-2.0

#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "sstkf/convcode.hpp"
#include "sstkf/kalman_oracle.hpp"
#include "sstkf/report.hpp"
#include "sstkf/simulate.hpp"

namespace sstkf::cli {

namespace {

struct Options {
    std::string out;
    std::string format = "csv";
    bool quiet = false;

    int table_id = 0;
    std::string code = "c1";
    std::string mode = "general";
    std::string grid = "-10..10";
    std::string emit = "values";
    std::uint64_t seed = 0;
    std::uint64_t branches = 100000;
    int truncation = 0;
    int states = 3;
    int obs = 2;
    int steps = 8;
    int nu = 6;
};

/// Cross-check for the QLI tables: tr(Sigma_x') <= tr(Sigma_x) row by row.
std::vector<std::string> trace_order_problems(const Table& qli, int general_id) {
    const Table general = reproduction_table(general_id);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < qli.rows.size(); ++i) {
        if (qli.number(i, "half_tr_sigma_x_prime") > general.number(i, "half_tr_sigma_x")) {
            out.push_back("row " + std::to_string(i) + ": tr(Sigma_x') > tr(Sigma_x)");
        }
    }
    return out;
}

int emit(const Table& table, TableKind kind, const Options& opt, std::ostream& out, std::ostream& err,
         std::vector<std::string> extra_problems = {}) {
    const std::string csv = to_csv(table);
    const std::string body = opt.format == "json" ? to_json(table) : csv;
    if (opt.out.empty()) {
        out << body;
    } else {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + opt.out + "'");
        f << body;
    }
    // Validate what was written, after a round trip through the CSV text.
    std::vector<std::string> problems = validate(parse_csv(csv), kind);
    problems.insert(problems.end(), extra_problems.begin(), extra_problems.end());
    for (const auto& p : problems) err << "validation: " << p << '\n';
    if (!opt.quiet && problems.empty()) err << "validated " << table.rows.size() << " rows\n";
    return problems.empty() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"SST decoding as linear filtering: tables, curves, simulation and identity checks", "sstkf"};
    app.require_subcommand(1);
    app.add_option("--out", opt.out, "Write output to this file instead of stdout");
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--quiet", opt.quiet, "Suppress the validation summary");

    auto add_code = [&](CLI::App* sub) {
        sub->add_option("--code", opt.code, "Built-in code id (c1, c2) or JSON definition path");
        sub->add_option("--mode", opt.mode, "Pre-inverse view")->check(CLI::IsMember({"general", "qli"}));
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--ebn0-db", opt.grid, "Eb/N0 grid: 4 | 0,2,4 | -10..10 | a..b:step");
    };

    auto* tables = app.add_subcommand("tables", "Reproduce table 1..10");
    tables->add_option("id", opt.table_id, "Table id")->required()->check(CLI::Range(1, 10));

    auto* curves = app.add_subcommand("curves", "Bound and eigenvalue series over an SNR grid");
    add_code(curves);
    add_grid(curves);

    auto* alpha = app.add_subcommand("alpha", "Main-decoder error probabilities");
    add_code(alpha);
    add_grid(alpha);
    alpha->add_option("--emit", opt.emit, "polynomial or values")->check(CLI::IsMember({"polynomial", "values"}));

    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo of the SST decoder");
    add_code(simulate_cmd);
    simulate_cmd->add_option("--ebn0-db", opt.grid, "Eb/N0 grid")->required();
    simulate_cmd->add_option("--branches", opt.branches, "Branches per grid point")->check(CLI::Range(1000ull, 1ull << 40));
    simulate_cmd->add_option("--seed", opt.seed, "Random seed")->required();
    simulate_cmd->add_option("--truncation", opt.truncation, "Viterbi decision depth (0 = default)");

    auto* kalman = app.add_subcommand("kalman-check", "Filter, information and smoother identities on a random model");
    kalman->add_option("--seed", opt.seed, "Random seed")->required();
    kalman->add_option("--states", opt.states, "State dimension")->check(CLI::Range(1, 8));
    kalman->add_option("--obs", opt.obs, "Observation dimension")->check(CLI::Range(1, 8));
    kalman->add_option("--steps", opt.steps, "Number of steps")->check(CLI::Range(2, 40));

    auto* search = app.add_subcommand("search", "Term-count search over the QLI family");
    search->add_option("--nu", opt.nu, "Constraint length")->check(CLI::Range(3, 12));
    search->add_option("--emit", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    add_grid(search);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (*tables) {
            std::vector<std::string> extra;
            const Table t = reproduction_table(opt.table_id);
            if (opt.table_id == 7 || opt.table_id == 8) extra = trace_order_problems(t, opt.table_id - 6);
            return emit(t, reproduction_table_kind(opt.table_id), opt, out, err, extra);
        }
        if (*curves) {
            return emit(curves_table(load_code(opt.code), parse_mode(opt.mode), parse_db_grid(opt.grid)), TableKind::Curves,
                        opt, out, err);
        }
        if (*alpha) {
            const ConvCode code = load_code(opt.code);
            if (opt.emit == "polynomial") return emit(alpha_polynomial_table(code, parse_mode(opt.mode)), TableKind::Other, opt, out, err);
            return emit(alpha_values_table(code, parse_mode(opt.mode), parse_db_grid(opt.grid)), TableKind::Alpha, opt, out,
                        err);
        }
        if (*simulate_cmd) {
            const ConvCode code = load_code(opt.code);
            std::vector<SimulationResult> results;
            for (double db : parse_db_grid(opt.grid)) {
                SimulationOptions so;
                so.mode = parse_mode(opt.mode);
                so.ebn0_db = db;
                so.branches = opt.branches;
                so.seed = opt.seed;
                so.truncation = opt.truncation;
                results.push_back(simulate(code, so));
            }
            return emit(simulation_table(results), TableKind::Simulation, opt, out, err);
        }
        if (*kalman) {
            const auto checks = kalman_check(opt.seed, opt.states, opt.obs, opt.steps);
            Table t;
            t.header = {"check", "max_deviation", "tolerance", "result"};
            std::vector<std::string> failed;
            for (const auto& c : checks) {
                t.rows.push_back({c.name, c.max_deviation, c.tolerance, std::string(c.pass() ? "PASS" : "FAIL")});
                if (!c.pass()) failed.push_back(c.name + " deviates by " + std::to_string(c.max_deviation));
            }
            return emit(t, TableKind::Other, opt, out, err, failed);
        }
        if (*search) return emit(search_table(opt.nu, parse_db_grid(opt.grid)), TableKind::Search, opt, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace sstkf::cli
