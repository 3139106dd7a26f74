// Command-line front end: gamma estimates, fixed-point experiments, table
// reproduction and the naive-vs-factorized benchmark.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zerogamma.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace zerogamma;

enum ExitCode : int
{
    exit_ok            = 0,
    exit_failure       = 1,
    exit_catalog_miss  = 2,
    exit_domain        = 3,
    exit_diverged      = 4,
    exit_singular      = 5,
};

constexpr std::uint64_t kSlowTruncation = 10'000'000;

struct GlobalOptions
{
    std::string zeros_file;
    bool        as_json = false;
    unsigned    threads = 1;

    [[nodiscard]] ReductionOptions reduction() const { return ReductionOptions{4096, threads}; }

    [[nodiscard]] ZeroCatalog catalog() const
    {
        return zeros_file.empty() ? builtin_catalog() : load_catalog(zeros_file);
    }
};

json number_or_null(double x)
{
    return std::isfinite(x) ? json(x) : json(nullptr);
}

json table_json(CsvTable const& table)
{
    json rows = json::array();
    for (auto const& row : table.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            auto const& cell = row[i];
            if (auto const* n = std::get_if<std::uint64_t>(&cell)) {
                obj[table.columns[i]] = *n;
            } else if (auto const* x = std::get_if<double>(&cell)) {
                obj[table.columns[i]] = number_or_null(*x);
            } else {
                obj[table.columns[i]] = nullptr;
            }
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

void write_file(std::string const& path, std::string const& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::ios_base::failure("cannot open output file '" + path + "'");
    }
    out << content;
    if (!out) {
        throw std::ios_base::failure("failed writing output file '" + path + "'");
    }
}

void warn_if_slow(std::uint64_t k)
{
    if (k >= kSlowTruncation) {
        std::cerr << "warning: k = " << k << " sums ten million terms or more per evaluation; expect long runtimes\n";
    }
}

struct GammaCommand
{
    std::string   method = "type1";
    std::uint64_t q      = 1;
    std::uint64_t k      = 100'000;

    int run(GlobalOptions const& global) const
    {
        auto const catalog  = global.catalog();
        auto const zero     = get_zero(catalog, q);
        warn_if_slow(k);
        auto estimate = method == "type1" ? gamma_type1(zero.t, k, global.reduction())
                                          : gamma_type2(zero.t, k, global.reduction());
        estimate.q = zero.q;

        if (global.as_json) {
            json out{{"command", "gamma"},
                     {"method", to_string(estimate.method)},
                     {"q", *estimate.q},
                     {"t_q", estimate.t_q},
                     {"k", estimate.k},
                     {"gamma", estimate.value},
                     {"gamma_text", format_number(estimate.value)}};
            std::cout << out.dump() << '\n';
        } else {
            std::cout << "method,q,t_q,k,gamma\n"
                      << to_string(estimate.method) << ',' << *estimate.q << ',' << format_number(estimate.t_q) << ','
                      << estimate.k << ',' << format_number(estimate.value) << '\n';
        }
        return exit_ok;
    }
};

struct ZeroIterateCommand
{
    std::string   map   = "g";
    double        y0    = 14.2;
    std::uint64_t k     = 100'000;
    std::uint64_t iters = 1000;
    double        tol   = 1e-12;
    std::string   out_path;

    int run(GlobalOptions const& global) const
    {
        warn_if_slow(k);
        FixedPointConfig config;
        config.map       = map == "f" ? FixedPointMap::f_map : FixedPointMap::g_map;
        config.y0        = y0;
        config.k         = k;
        config.max_iters = iters;
        config.tol       = tol;
        config.reduction = global.reduction();
        auto const trace = iterate_fixed_point(config);

        CsvTable csv{{"iteration", "value"}, {}};
        for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
            csv.rows.push_back({static_cast<std::uint64_t>(i), trace.iterates[i]});
        }
        std::ostringstream csv_text;
        csv.write(csv_text);

        json meta{{"command", "zero-iterate"},
                  {"map", to_string(trace.map)},
                  {"y0", y0},
                  {"k", trace.k},
                  {"max_iters", iters},
                  {"tol", tol},
                  {"status", to_string(trace.status)},
                  {"iterations", trace.iterates.size() - 1},
                  {"final_residual", number_or_null(trace.final_residual)},
                  {"iterates", trace.iterates}};

        if (!out_path.empty()) {
            write_file(out_path, global.as_json ? meta.dump(2) + "\n" : csv_text.str());
        }
        if (global.as_json) {
            std::cout << meta.dump() << '\n';
        } else if (out_path.empty()) {
            std::cout << csv_text.str();
        }
        std::cerr << "status: " << to_string(trace.status) << " after " << trace.iterates.size() - 1
                  << " iteration(s)\n";

        switch (trace.status) {
        case TraceStatus::converged:
        case TraceStatus::max_iters: return exit_ok;
        case TraceStatus::diverged: return exit_diverged;
        case TraceStatus::singular_guard: return exit_singular;
        }
        return exit_failure;
    }
};

struct TablesCommand
{
    std::string                  id = "T1";
    std::string                  out_path;
    std::optional<std::uint64_t> k;
    std::vector<std::uint64_t>   zeros;

    int run(GlobalOptions const& global) const
    {
        auto const table_id = parse_table_id(id);
        if (!table_id) {
            throw domain_error("unknown table id '" + id + "' (expected T1..T6)");
        }
        auto const catalog = global.catalog();
        auto const table   = build_table(TableSpec{*table_id, k, zeros}, catalog, global.reduction());

        std::ostringstream csv_text;
        table.write(csv_text);
        if (!out_path.empty()) {
            write_file(out_path, csv_text.str());
        }
        if (global.as_json) {
            json out{{"command", "tables"}, {"id", id}, {"columns", table.columns}, {"rows", table_json(table)}};
            if (!out_path.empty()) {
                out["out"] = out_path;
            }
            std::cout << out.dump() << '\n';
        } else if (out_path.empty()) {
            std::cout << csv_text.str();
        }
        return exit_ok;
    }
};

struct BenchCommand
{
    std::vector<std::uint64_t> ks{1000};
    std::uint64_t              q    = 1;
    std::uint64_t              cap  = kDefaultOracleCap;
    int                        runs = 3;

    int run(GlobalOptions const& global) const
    {
        auto const catalog = global.catalog();
        auto const zero    = get_zero(catalog, q);
        auto const reports = bench_offdiag(zero.t, ks, cap, runs, global.reduction());
        auto const table   = bench_table(reports);
        if (global.as_json) {
            json out{{"command", "bench"}, {"q", q}, {"columns", table.columns}, {"rows", table_json(table)}};
            std::cout << out.dump() << '\n';
        } else {
            table.write(std::cout);
        }
        return exit_ok;
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Harmonic-series formulas at individual zeta zeros: gamma estimates, zero maps, table reproduction"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--zeros-file", global.zeros_file, "Zero list ('t' or 'q t' per line) replacing the built-in catalog");
    app.add_flag("--json", global.as_json, "Write a single JSON object to stdout");
    app.add_option("--threads", global.threads, "Worker threads for long sums (never changes results)")
        ->check(CLI::PositiveNumber);

    GammaCommand gamma_cmd;
    auto*        gamma = app.add_subcommand("gamma", "Estimate gamma from one zero");
    gamma->add_option("--method", gamma_cmd.method, "type1 (alternating) or type2 (non-alternating)")
        ->check(CLI::IsMember({"type1", "type2"}));
    gamma->add_option("--q", gamma_cmd.q, "Zero index");
    gamma->add_option("--k", gamma_cmd.k, "Truncation length");

    ZeroIterateCommand iterate_cmd;
    auto*              iterate = app.add_subcommand("zero-iterate", "Iterate the f or g fixed-point map");
    iterate->add_option("--map", iterate_cmd.map, "f or g")->check(CLI::IsMember({"f", "g"}));
    iterate->add_option("--y0", iterate_cmd.y0, "Initial value");
    iterate->add_option("--k", iterate_cmd.k, "Truncation length");
    iterate->add_option("--iters", iterate_cmd.iters, "Maximum number of iterations")->check(CLI::PositiveNumber);
    iterate->add_option("--tol", iterate_cmd.tol, "Stop when successive iterates differ by at most this");
    iterate->add_option("--out", iterate_cmd.out_path, "Write the trace here instead of stdout");

    TablesCommand tables_cmd;
    auto*         tables = app.add_subcommand("tables", "Regenerate one of the published tables as CSV");
    tables->add_option("--id", tables_cmd.id, "T1..T6")->required();
    tables->add_option("--out", tables_cmd.out_path, "Output CSV path (stdout when omitted)");
    tables->add_option("--k", tables_cmd.k, "Override the truncation length");
    tables->add_option("--q", tables_cmd.zeros, "Override the zero indices")->delimiter(',');

    BenchCommand bench_cmd;
    auto*        bench = app.add_subcommand("bench", "Time the O(k^2) double sum against the O(k) factorization");
    bench->add_option("--k", bench_cmd.ks, "Comma-separated truncation lengths")->delimiter(',');
    bench->add_option("--q", bench_cmd.q, "Zero index");
    bench->add_option("--oracle-cap", bench_cmd.cap, "Largest k the double loop accepts");
    bench->add_option("--runs", bench_cmd.runs, "Timed repetitions (median reported)")->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gamma->parsed()) {
            return gamma_cmd.run(global);
        }
        if (iterate->parsed()) {
            return iterate_cmd.run(global);
        }
        if (tables->parsed()) {
            return tables_cmd.run(global);
        }
        if (bench->parsed()) {
            return bench_cmd.run(global);
        }
    } catch (catalog_error const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_catalog_miss;
    } catch (singular_error const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_singular;
    } catch (std::domain_error const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_failure;
}
