#include "dpart/commands.hpp"

#include "dpart/constant.hpp"

#include <fmt/format.h>

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace dpart::cli {

std::string format_fixed(double value, int digits)
{
    if (digits < 0 || digits > 17) throw std::invalid_argument("digits must lie in [0, 17]");
    return fmt::format("{:.{}f}", value, digits);
}

void write_r(std::ostream& out, std::size_t max_k, bool exact, int digits, const Limits& limits)
{
    out << "k,r\n";
    if (exact) {
        const auto series = r_series(max_k, limits);
        for (std::size_t k = 0; k <= max_k; ++k) out << k << ',' << render(series[k]) << '\n';
    } else {
        const auto series = r_series_float(max_k, limits);
        for (std::size_t k = 0; k <= max_k; ++k) out << k << ',' << format_fixed(series[k], digits) << '\n';
    }
}

void write_q(std::ostream& out, std::size_t max_k, const Limits& limits)
{
    const auto series = q_series(max_k, limits);
    out << "k,q\n";
    for (std::size_t k = 0; k <= max_k; ++k) out << k << ',' << render(series[k]) << '\n';
}

namespace {

constexpr std::size_t kFieldMaxN = 5;
constexpr std::size_t kFieldMaxK = 16;
constexpr int kDeltaRows = 13;

template <class Table>
void write_field(std::ostream& out, const Table& table)
{
    out << "n";
    for (std::size_t k = 0; k <= table.k_max(); ++k) out << ", " << k;
    out << '\n';
    for (std::size_t n = 0; n <= table.n_max(); ++n) {
        out << n;
        for (std::size_t k = 0; k <= table.k_max(); ++k) out << ", " << render(table(n, k));
        out << '\n';
    }
}

void write_delta_rows(std::ostream& out, int rows, int digits)
{
    out << "m, delta_m, c_m\n";
    for (int m = 1; m <= rows; ++m) {
        const auto d = delta_m(m);
        out << m << ", " << format_fixed(d.delta_m, digits) << ", " << format_fixed(d.c_m, digits) << '\n';
    }
}

void write_cross_check(std::ostream& out, double value, int digits, long long oracle_terms)
{
    const auto oracle = harmonic_oracle(oracle_terms);
    out << "harmonic_oracle_terms: " << oracle.terms_used << '\n';
    out << "harmonic_oracle_value: " << format_fixed(oracle.value, digits) << '\n';
    out << "harmonic_oracle_error_bound: " << fmt::format("{:.3e}", oracle.error_bound) << '\n';
    out << "difference: " << fmt::format("{:.3e}", value - oracle.value) << '\n';
}

}  // namespace

void write_table(std::ostream& out, int which, int digits)
{
    switch (which) {
    case 1:
        write_delta_rows(out, kDeltaRows, digits);
        return;
    case 2:
        write_field(out, q_table(kFieldMaxN, kFieldMaxK));
        return;
    case 3:
        write_field(out, r_table(kFieldMaxN, kFieldMaxK));
        return;
    default:
        throw std::invalid_argument("table must be 1, 2 or 3");
    }
}

void write_constant_terms(std::ostream& out, int terms, int digits, long long oracle_terms)
{
    if (terms < 1) throw std::invalid_argument("terms must be >= 1");
    write_delta_rows(out, terms, digits);
    const auto d = delta_m(terms);
    const double bound = d.c_m * std::expm1(delta_tail_bound(terms) + d.zeta_error);
    out << "method: zeta_series\n";
    out << "terms: " << terms << '\n';
    out << "delta: " << format_fixed(d.delta_m, digits) << '\n';
    out << "C: " << format_fixed(d.c_m, digits) << '\n';
    out << "error_bound: " << fmt::format("{:.3e}", bound) << '\n';
    write_cross_check(out, d.c_m, digits, oracle_terms);
}

void write_constant_tol(std::ostream& out, double tol, int digits, long long oracle_terms)
{
    const auto c = constant_c(tol);
    out << "method: zeta_series\n";
    out << "tolerance: " << fmt::format("{:.3e}", tol) << '\n';
    out << "terms: " << c.terms_used << '\n';
    out << "delta: " << format_fixed(delta_m(static_cast<int>(c.terms_used)).delta_m, digits) << '\n';
    out << "C: " << format_fixed(c.value, digits) << '\n';
    out << "error_bound: " << fmt::format("{:.3e}", c.error_bound) << '\n';
    write_cross_check(out, c.value, digits, oracle_terms);
}

void write_figure(std::ostream& out, std::size_t max_k, int digits)
{
    if (max_k > kMaxFigureK)
        throw ResourceLimitError("figure: max_k " + std::to_string(max_k) + " exceeds " + std::to_string(kMaxFigureK));
    const auto r = r_series_float(max_k);
    const std::string c = format_fixed(constant_c(1e-8).value, digits);
    out << "k,r,C\n";
    for (std::size_t k = 0; k <= max_k; ++k) out << k << ',' << format_fixed(r[k], digits) << ',' << c << '\n';
}

}  // namespace dpart::cli
