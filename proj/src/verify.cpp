#include "dpart/verify.hpp"

#include "dpart/asymptotics.hpp"
#include "dpart/constant.hpp"
#include "dpart/partitions.hpp"
#include "dpart/reference_values.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace dpart {

namespace {

using Results = std::vector<CheckResult>;

void record(Results& out, std::string name, bool passed, std::string detail)
{
    out.push_back({std::move(name), passed, std::move(detail)});
}

void check_oracles(Results& out, std::size_t max_k)
{
    const auto r = r_series(max_k);
    const auto q = q_series(max_k);
    std::size_t r_bad = 0;
    std::size_t q_bad = 0;
    for (std::size_t k = 0; k <= max_k; ++k) {
        if (r[k] != r_oracle(k)) ++r_bad;
        if (q[k] != q_oracle(k)) ++q_bad;
    }
    record(out, "oracle_r", r_bad == 0, fmt::format("k <= {}, {} mismatches", max_k, r_bad));
    record(out, "oracle_q", q_bad == 0, fmt::format("k <= {}, {} mismatches", max_k, q_bad));
}

void check_identities(Results& out, const RTable& r, const QTable& q)
{
    std::size_t bad = 0;
    for (std::size_t n = 0; n <= r.n_max(); ++n) {
        Rational r_sum = 0;
        BigInt q_sum = 0;
        const std::size_t top = n * (n + 1) / 2;
        for (std::size_t k = 0; k <= r.k_max(); ++k) {
            r_sum += r(n, k);
            q_sum += q(n, k);
            if (k > top && (r(n, k) != 0 || q(n, k) != 0)) ++bad;
        }
        BigInt factorial = 1;
        for (std::size_t i = 2; i <= n; ++i) factorial *= static_cast<unsigned long>(i);
        if (r_sum != static_cast<unsigned long>(n + 1)) ++bad;
        if (q_sum != BigInt(1) << static_cast<mp_bitcnt_t>(n)) ++bad;
        if (r(n, top) != Rational(BigInt(1), factorial)) ++bad;
    }
    record(out, "row_identities", bad == 0, fmt::format("n <= {}, {} violations", r.n_max(), bad));
}

void check_recurrences(Results& out, const RTable& r, const QTable& q)
{
    const bool r_ok = r == r_table_two_term(r.n_max(), r.k_max()) && r == r_table_product(r.n_max(), r.k_max());
    const bool q_ok = q == q_table_two_term(q.n_max(), q.k_max()) && q == q_table_product(q.n_max(), q.k_max());
    record(out, "recurrence_cross_check", r_ok && q_ok,
           fmt::format("n <= {}, k <= {}: r {}, q {}", r.n_max(), r.k_max(), r_ok ? "equal" : "differ",
                       q_ok ? "equal" : "differ"));
}

void check_fields(Results& out, const FaultInjection& faults)
{
    using namespace reference;
    auto q = q_table(kFieldRows - 1, kFieldCols - 1);
    auto r = r_table(kFieldRows - 1, kFieldCols - 1);
    if (faults.corrupt_q_field) faults.corrupt_q_field(q);
    if (faults.corrupt_r_field) faults.corrupt_r_field(r);
    std::size_t q_bad = 0;
    std::size_t r_bad = 0;
    for (int n = 0; n < kFieldRows; ++n) {
        for (int k = 0; k < kFieldCols; ++k) {
            if (q(n, k) != kQField[n][k]) ++q_bad;
            if (r(n, k) != parse_rational(kRField[n][k])) ++r_bad;
        }
    }
    record(out, "q_field_table", q_bad == 0, fmt::format("{} mismatched cells", q_bad));
    record(out, "r_field_table", r_bad == 0, fmt::format("{} mismatched cells", r_bad));
}

void check_delta_table(Results& out)
{
    double worst = 0.0;
    for (const auto& row : reference::kDeltaTable) {
        const auto d = delta_m(row.m);
        worst = std::max({worst, std::abs(d.delta_m - row.delta), std::abs(d.c_m - row.c)});
    }
    record(out, "delta_table", worst <= reference::kDeltaTableTolerance, fmt::format("max deviation {:.2e}", worst));
}

void check_zeta_table(Results& out)
{
    double worst = 0.0;
    for (const auto& row : reference::kZetaTable)
        worst = std::max(worst, std::abs(zeta_minus_one(row.k, 1e-12).value_minus_one - row.value_minus_one));
    record(out, "zeta_table", worst <= reference::kZetaTableTolerance, fmt::format("max deviation {:.2e}", worst));
}

void check_float_pipeline(Results& out)
{
    constexpr std::size_t K = 200;
    const auto exact = r_series(K);
    const auto approx = r_series_float(K);
    double worst = 0.0;
    for (std::size_t k = 0; k <= K; ++k) {
        const double e = to_double(exact[k]);
        worst = std::max(worst, std::abs(approx[k] - e) / e);
    }
    record(out, "float_vs_exact", worst <= 1e-9, fmt::format("k <= {}, max relative error {:.2e}", K, worst));
}

void check_series_product(Results& out)
{
    // Coefficients against the product at x = 1/2.
    const auto r = r_series_float(200);
    double series = 0.0;
    for (std::size_t k = r.size(); k-- > 0;) series = series * 0.5 + r[k];
    const double product = eval_R_partial(0.5, 200);
    const double coeff_gap = std::abs(series - product);
    record(out, "coefficients_vs_product", coeff_gap <= 1e-9, fmt::format("x = 0.5, gap {:.2e}", coeff_gap));

    // Log expansion against the product, with enough columns that the
    // omitted alternating tail x^(S+1)/(S+1) is below 1e-12.
    double worst = 0.0;
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        std::size_t columns = 60;
        while (std::pow(x, static_cast<double>(columns + 1)) / static_cast<double>(columns + 1) > 1e-12) ++columns;
        const double lhs = std::exp(eval_lnR_series(x, columns, 1e-12));
        worst = std::max(worst, std::abs(lhs - eval_R_partial(x, 100'000)));
    }
    record(out, "log_series_vs_product", worst <= 1e-6, fmt::format("max gap {:.2e}", worst));
}

void check_constant(Results& out, long long oracle_terms)
{
    const auto c = constant_c(1e-10);
    const auto h = harmonic_oracle(oracle_terms);
    const double gap = std::abs(c.value - h.value);
    const bool ok = gap <= c.error_bound + h.error_bound;
    record(out, "constant_cross_check", ok,
           fmt::format("zeta {:.10f}, harmonic(N={}) {:.10f}, gap {:.2e}", c.value, oracle_terms, h.value, gap));
}

void check_limit_trend(Results& out)
{
    const double c = constant_c(1e-10).value;
    double previous = std::numeric_limits<double>::infinity();
    bool monotone = true;
    double last = 0.0;
    for (int j = 2; j <= 7; ++j) {
        const double x = 1.0 - std::ldexp(1.0, -j);
        last = std::abs(limit_probe(x, adequate_truncation(x)) - c);
        if (!(last < previous)) monotone = false;
        previous = last;
    }
    record(out, "limit_probe_trend", monotone, fmt::format("distance at x = 1 - 2^-7: {:.4f}", last));
}

}  // namespace

Results run_verify(VerifyDepth depth, const FaultInjection& faults)
{
    const bool full = depth == VerifyDepth::full;
    Results out;
    check_oracles(out, full ? 45 : 30);

    constexpr std::size_t kMaxRow = 30;
    const auto r = r_table(kMaxRow, kMaxRow * (kMaxRow + 1) / 2);
    const auto q = q_table(kMaxRow, kMaxRow * (kMaxRow + 1) / 2);
    check_identities(out, r, q);
    check_recurrences(out, r, q);

    check_fields(out, faults);
    check_delta_table(out);
    check_zeta_table(out);
    check_float_pipeline(out);
    check_series_product(out);
    check_constant(out, full ? 10'000'000 : 1'000'000);
    if (full) check_limit_trend(out);
    return out;
}

bool all_passed(const std::vector<CheckResult>& results)
{
    return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
}

void write_report(std::ostream& out, const std::vector<CheckResult>& results)
{
    for (const auto& c : results) out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
}

}  // namespace dpart
