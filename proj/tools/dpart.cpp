// dpart: coefficients of prod(1 + x^k/k) and prod(1 + x^k), and the
// constant their normalized coefficients approach.

#include "dpart/commands.hpp"
#include "dpart/verify.hpp"

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <optional>
#include <sstream>

int main(int argc, char** argv)
{
    CLI::App app{"Coefficients of prod(1 + x^k/k) and prod(1 + x^k), and their limit constant"};
    app.require_subcommand(1);
    app.fallthrough();

    int digits = dpart::cli::kDefaultDigits;
    app.add_option("--digits", digits, "Decimal places for real-valued output")
        ->check(CLI::Range(0, 17))
        ->capture_default_str();

    std::size_t max_k = 10;
    bool float_mode = false;

    auto* r_cmd = app.add_subcommand("r", "CSV of r(k) for k = 0..max-k");
    r_cmd->add_option("--max-k", max_k, "Largest k")->capture_default_str();
    auto* exact_flag = r_cmd->add_flag("--exact", "Exact rationals p/q (default)");
    r_cmd->add_flag("--float", float_mode, "Double-precision values")->excludes(exact_flag);

    auto* q_cmd = app.add_subcommand("q", "CSV of q(k) for k = 0..max-k");
    q_cmd->add_option("--max-k", max_k, "Largest k")->capture_default_str();

    int which = 0;
    auto* tables_cmd = app.add_subcommand("tables", "Reproduce table 1 (Delta_m, C_m), 2 (q_n(k)) or 3 (r_n(k))");
    tables_cmd->add_option("which,--which", which, "Table number")->required()->check(CLI::IsMember({1, 2, 3}));

    std::optional<int> terms;
    std::optional<double> tol;
    auto* constant_cmd = app.add_subcommand("constant", "Report Delta_m, C_m, C and the harmonic cross-check");
    auto* terms_opt = constant_cmd->add_option("--terms", terms, "Fixed number of terms m")->check(CLI::PositiveNumber);
    constant_cmd->add_option("--tol", tol, "Target absolute tolerance on C")->excludes(terms_opt);

    std::size_t figure_k = 200;
    auto* figure_cmd = app.add_subcommand("figure", "CSV (k, r(k), C) for plotting");
    figure_cmd->add_option("--max-k", figure_k, "Largest k (<= 2000)")->capture_default_str();

    std::string depth = "quick";
    auto* verify_cmd = app.add_subcommand("verify", "Run the self-check suite");
    verify_cmd->add_option("--depth", depth, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    // Buffer so a failing command emits no partial data.
    std::ostringstream out;
    try {
        if (*r_cmd) {
            dpart::cli::write_r(out, max_k, !float_mode, digits);
        } else if (*q_cmd) {
            dpart::cli::write_q(out, max_k);
        } else if (*tables_cmd) {
            dpart::cli::write_table(out, which, digits);
        } else if (*constant_cmd) {
            if (terms)
                dpart::cli::write_constant_terms(out, *terms, digits);
            else
                dpart::cli::write_constant_tol(out, tol.value_or(1e-10), digits);
        } else if (*figure_cmd) {
            dpart::cli::write_figure(out, figure_k, digits);
        } else if (*verify_cmd) {
            const auto results = dpart::run_verify(depth == "full" ? dpart::VerifyDepth::full : dpart::VerifyDepth::quick);
            dpart::write_report(out, results);
            std::cout << out.str();
            return dpart::all_passed(results) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "dpart: " << e.what() << '\n';
        return 2;
    }
    std::cout << out.str();
    return 0;
}
