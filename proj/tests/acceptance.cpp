// Acceptance suite: one line per criterion, "PASS"/"FAIL", with the
// measured quantity and wall time. Exit status is nonzero if any fails.

#include "dpart/asymptotics.hpp"
#include "dpart/coefficients.hpp"
#include "dpart/constant.hpp"
#include "dpart/partitions.hpp"

#include <fmt/format.h>

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

using namespace dpart;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double time_limit_s;
    std::function<Outcome()> run;
};

constexpr int kRows = 6;
constexpr int kCols = 17;

// r_n(k), 0 <= n <= 5, 0 <= k <= 16.
const std::array<std::array<const char*, kCols>, kRows> kRField{{
    {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"1", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"1", "1", "1/2", "1/2", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"1", "1", "1/2", "5/6", "1/3", "1/6", "1/6", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"1", "1", "1/2", "5/6", "7/12", "5/12", "7/24", "5/24", "1/12", "1/24", "1/24", "0", "0", "0", "0", "0", "0"},
    {"1", "1", "1/2", "5/6", "7/12", "37/60", "59/120", "37/120", "1/4", "19/120", "1/8", "7/120", "1/24", "1/60",
     "1/120", "1/120", "0"},
}};

const std::array<std::array<int, kCols>, kRows> kQField{{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 2, 2, 3, 3, 3, 3, 3, 3, 2, 2, 1, 1, 1, 0},
}};

// m, Delta_m, C_m
const double kDeltaTable[13][3] = {
    {1, 0.0, 0.7357589},        {2, 0.3224670, 0.5329542},  {3, 0.2551147, 0.5700863},
    {4, 0.2756955, 0.5584734},  {5, 0.2683100, 0.5626133},  {6, 0.2712005, 0.5609894},
    {7, 0.2700078, 0.5616589},  {8, 0.2705174, 0.5613727},  {9, 0.2702943, 0.5614980},
    {10, 0.2703937, 0.5614421}, {11, 0.2703488, 0.5614674}, {12, 0.2703693, 0.5614559},
    {13, 0.2703599, 0.5614612},
};

const double kZetaTable[10] = {0.644934, 0.202057, 0.082323, 0.036928, 0.017343,
                               0.008349, 0.004077, 0.002008, 0.000995, 0.000494};

// Table values are printed to 7 (Delta, C) and 6 (zeta) decimals; a match
// means agreement within one unit of the last printed place.
constexpr double kSevenPlaces = 1e-7;
constexpr double kSixPlaces = 1e-6;

constexpr double kPublishedC = 0.56146;

Outcome table3()
{
    const auto t = r_table(5, 16);
    int mismatches = 0;
    int nonzero = 0;
    for (int n = 0; n < kRows; ++n)
        for (int k = 0; k < kCols; ++k) {
            if (t(n, k) != parse_rational(kRField[n][k])) ++mismatches;
            if (t(n, k) != 0) ++nonzero;
        }
    return {mismatches == 0, fmt::format("{} mismatched cells of {}, {} nonzero, r_5(6) = {}, r_5(9) = {}",
                                         mismatches, kRows * kCols, nonzero, render(t(5, 6)), render(t(5, 9)))};
}

Outcome table2()
{
    const auto t = q_table(5, 16);
    int mismatches = 0;
    for (int n = 0; n < kRows; ++n)
        for (int k = 0; k < kCols; ++k)
            if (t(n, k) != kQField[n][k]) ++mismatches;
    return {mismatches == 0, fmt::format("{} mismatched cells of {}", mismatches, kRows * kCols)};
}

Outcome table1()
{
    double worst = 0.0;
    int worst_m = 0;
    for (const auto& row : kDeltaTable) {
        const int m = static_cast<int>(row[0]);
        const auto d = delta_m(m);
        const double dev = std::max(std::abs(d.delta_m - row[1]), std::abs(d.c_m - row[2]));
        if (dev > worst) {
            worst = dev;
            worst_m = m;
        }
    }
    const auto d9 = delta_m(9);
    return {worst <= kSevenPlaces, fmt::format("max deviation {:.2e} (m = {}); m = 9: {:.7f}, {:.7f}", worst, worst_m,
                                               d9.delta_m, d9.c_m)};
}

Outcome zeta_table()
{
    double worst = 0.0;
    for (int k = 2; k <= 11; ++k)
        worst = std::max(worst, std::abs(zeta_minus_one(k, 1e-12).value_minus_one - kZetaTable[k - 2]));
    return {worst <= kSixPlaces,
            fmt::format("max deviation {:.2e}; k = 7: {:.6f}", worst, zeta_minus_one(7, 1e-12).value_minus_one)};
}

Outcome oracle_equivalence()
{
    const auto q = q_series(30);
    int bad = 0;
    for (std::size_t k = 0; k <= 30; ++k) {
        if (r_of(k) != r_oracle(k)) ++bad;
        if (q[k] != q_oracle(k)) ++bad;
    }
    return {bad == 0, fmt::format("k <= 30, {} mismatches; r(30) = {}", bad, render(r_of(30)))};
}

Outcome identity_suite()
{
    int bad = 0;
    BigInt factorial = 1;
    for (std::size_t n = 0; n <= 25; ++n) {
        if (n > 1) factorial *= static_cast<unsigned long>(n);
        const std::size_t top = n * (n + 1) / 2;
        // One column past the bound so the zero check has something to see.
        const auto r = r_table(n, top + 1);
        const auto q = q_table(n, top + 1);
        Rational r_sum = 0;
        BigInt q_sum = 0;
        for (std::size_t k = 0; k <= top + 1; ++k) {
            r_sum += r(n, k);
            q_sum += q(n, k);
        }
        if (r_sum != static_cast<unsigned long>(n + 1)) ++bad;
        if (q_sum != BigInt(1) << static_cast<mp_bitcnt_t>(n)) ++bad;
        if (r(n, top + 1) != 0 || q(n, top + 1) != 0) ++bad;
        if (r(n, top) != Rational(BigInt(1), factorial)) ++bad;
    }
    return {bad == 0, fmt::format("n <= 25, {} violations", bad)};
}

Outcome recurrence_cross_check()
{
    constexpr std::size_t n = 30;
    constexpr std::size_t k = n * (n + 1) / 2;
    const auto by_sum = r_table(n, k);
    const bool product = by_sum == r_table_product(n, k);
    const bool two_term = by_sum == r_table_two_term(n, k);
    return {product && two_term, fmt::format("n <= {}, k <= {}: product {}, two-term {}", n, k,
                                             product ? "equal" : "differ", two_term ? "equal" : "differ")};
}

Outcome constant_cross_validation()
{
    const auto c = constant_c(1e-10);
    const auto h = harmonic_oracle(10'000'000);
    const double gap = std::abs(c.value - h.value);
    const bool ok = gap <= 2e-6 && std::abs(c.value - kPublishedC) <= 1e-4 && std::abs(h.value - kPublishedC) <= 1e-4;
    return {ok, fmt::format("zeta {:.10f} (m = {}), harmonic {:.10f}, gap {:.2e}", c.value, c.terms_used, h.value, gap)};
}

Outcome figure_behaviour()
{
    const auto r = r_series_float(500);
    const double c = constant_c(1e-10).value;
    std::size_t below = 0;
    for (std::size_t k = 10; k <= 500; ++k)
        if (!(r[k] > c)) ++below;
    const double d50 = std::abs(r[50] - c);
    const double d500 = std::abs(r[500] - c);
    return {below == 0 && d500 < d50,
            fmt::format("{} of k in [10, 500] not above C; |r(50)-C| = {:.3e}, |r(500)-C| = {:.3e}", below, d50, d500)};
}

Outcome limit_probe_sequence()
{
    const double c = constant_c(1e-10).value;
    std::vector<double> distance;
    for (int j = 2; j <= 7; ++j) {
        const double x = 1.0 - std::ldexp(1.0, -j);
        distance.push_back(std::abs(limit_probe(x, adequate_truncation(x)) - c));
    }
    bool monotone = true;
    for (std::size_t i = 1; i < distance.size(); ++i)
        if (!(distance[i] < distance[i - 1])) monotone = false;
    const bool close = distance.back() <= 0.01;
    std::string trail;
    for (double d : distance) trail += fmt::format(" {:.4f}", d);
    return {monotone && close, fmt::format("distances{}; monotone {}, final within 0.01 {}", trail,
                                           monotone ? "yes" : "no", close ? "yes" : "no")};
}

Outcome series_product()
{
    double worst = 0.0;
    std::string per_x;
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double gap = std::abs(std::exp(eval_lnR_series(x, 60, 1e-12)) - eval_R_partial(x, 100'000));
        worst = std::max(worst, gap);
        per_x += fmt::format(" x={}:{:.1e}", x, gap);
    }
    return {worst <= 1e-6, fmt::format("gaps{}", per_x)};
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "table3_r_field", 1.0, table3},
        {2, "table2_q_field", 1.0, table2},
        {3, "table1_delta_c", 1.0, table1},
        {4, "zeta_table", 1.0, zeta_table},
        {5, "oracle_equivalence", 30.0, oracle_equivalence},
        {6, "identity_suite", 60.0, identity_suite},
        {7, "recurrence_cross_check", 60.0, recurrence_cross_check},
        {8, "constant_cross_validation", 10.0, constant_cross_validation},
        {9, "figure_approach_from_above", 30.0, figure_behaviour},
        {10, "limit_probe", 60.0, limit_probe_sequence},
        {11, "log_series_vs_product", 30.0, series_product},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds <= c.time_limit_s;
        const bool passed = o.passed && in_time;
        if (!passed) ++failures;
        fmt::print("{} [{:2}] {}: {} ({:.3f} s, limit {} s{})\n", passed ? "PASS" : "FAIL", c.id, c.name, o.detail,
                   seconds, c.time_limit_s, in_time ? "" : ", too slow");
    }

    // Not a criterion: the same comparison at x = 0.9 once the column count
    // covers the alternating tail.
    const double extended =
        std::abs(std::exp(eval_lnR_series(0.9, 250, 1e-12)) - eval_R_partial(0.9, 100'000));
    fmt::print("INFO log_series_vs_product at x=0.9 with 250 columns: gap {:.1e}\n", extended);

    fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
    return failures == 0 ? 0 : 1;
}
