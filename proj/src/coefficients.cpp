#include "dpart/coefficients.hpp"

#include <cmath>
#include <string>

namespace dpart {

namespace detail {

void check_cells(std::size_t n_max, std::size_t k_max, const Limits& limits)
{
    // n_max * k_max overflows only far beyond any sane budget; test by division.
    if (n_max != 0 && k_max > limits.cell_budget / n_max)
        throw ResourceLimitError("coefficient table " + std::to_string(n_max) + " x " + std::to_string(k_max) +
                                 " exceeds the cell budget of " + std::to_string(limits.cell_budget));
}

void check_degree(std::size_t K, std::size_t bound, const char* what)
{
    if (K > bound)
        throw ResourceLimitError(std::string(what) + ": degree " + std::to_string(K) + " exceeds the bound " +
                                 std::to_string(bound));
}

}  // namespace detail

namespace {

BigInt unit_weight(std::size_t) { return BigInt(1); }
Rational reciprocal_weight(std::size_t m) { return Rational(1, static_cast<unsigned long>(m)); }

// Row n for k < n copies row n-1; for k >= n each cell sums over the
// largest part m: X_n(k) = sum_{m=1}^{n} w(m) X_{m-1}(k-m).
template <class Scalar, class WeightFn>
CoeffTable<Scalar> recurrence_table(CoeffKind kind, std::size_t n_max, std::size_t k_max, WeightFn weight,
                                    const Limits& limits)
{
    detail::check_cells(n_max, k_max, limits);
    CoeffTable<Scalar> t(kind, n_max, k_max);
    t(0, 0) = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::size_t k = 0; k <= k_max && k < n; ++k) t(n, k) = t(n - 1, k);
        for (std::size_t k = n; k <= k_max; ++k) {
            Scalar sum = 0;
            for (std::size_t m = 1; m <= n; ++m) {
                const Scalar& prev = t(m - 1, k - m);
                if (prev != 0) sum += weight(m) * prev;
            }
            t(n, k) = sum;
        }
    }
    return t;
}

template <class Scalar, class WeightFn>
CoeffTable<Scalar> two_term_table(CoeffKind kind, std::size_t n_max, std::size_t k_max, WeightFn weight,
                                  const Limits& limits)
{
    detail::check_cells(n_max, k_max, limits);
    CoeffTable<Scalar> t(kind, n_max, k_max);
    t(0, 0) = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const Scalar w = weight(n);
        for (std::size_t k = 0; k <= k_max; ++k) {
            t(n, k) = t(n - 1, k);
            if (k >= n) t(n, k) += w * t(n - 1, k - n);
        }
    }
    return t;
}

template <class Scalar, class WeightFn>
CoeffTable<Scalar> product_table(CoeffKind kind, std::size_t n_max, std::size_t k_max, WeightFn weight,
                                 const Limits& limits)
{
    detail::check_cells(n_max, k_max, limits);
    CoeffTable<Scalar> t(kind, n_max, k_max);
    std::vector<Scalar> row(k_max + 1, Scalar(0));
    row[0] = 1;
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (n > 0) detail::multiply_factor(row, n, weight(n));
        for (std::size_t k = 0; k <= k_max; ++k) t(n, k) = row[k];
    }
    return t;
}

template <class Scalar, class WeightFn>
TruncatedSeries<Scalar> product_series(std::size_t K, WeightFn weight)
{
    TruncatedSeries<Scalar> s{std::vector<Scalar>(K + 1, Scalar(0))};
    s.coeffs[0] = 1;
    for (std::size_t n = 1; n <= K; ++n) detail::multiply_factor(s.coeffs, n, weight(n));
    return s;
}

}  // namespace

QTable q_table(std::size_t n_max, std::size_t k_max, const Limits& limits)
{
    return recurrence_table<BigInt>(CoeffKind::Q, n_max, k_max, unit_weight, limits);
}

RTable r_table(std::size_t n_max, std::size_t k_max, const Limits& limits)
{
    return recurrence_table<Rational>(CoeffKind::R, n_max, k_max, reciprocal_weight, limits);
}

RTable r_table_two_term(std::size_t n_max, std::size_t k_max, const Limits& limits)
{
    return two_term_table<Rational>(CoeffKind::R, n_max, k_max, reciprocal_weight, limits);
}

QTable q_table_two_term(std::size_t n_max, std::size_t k_max, const Limits& limits)
{
    return two_term_table<BigInt>(CoeffKind::Q, n_max, k_max, unit_weight, limits);
}

RTable r_table_product(std::size_t n_max, std::size_t k_max, const Limits& limits)
{
    return product_table<Rational>(CoeffKind::R, n_max, k_max, reciprocal_weight, limits);
}

QTable q_table_product(std::size_t n_max, std::size_t k_max, const Limits& limits)
{
    return product_table<BigInt>(CoeffKind::Q, n_max, k_max, unit_weight, limits);
}

TruncatedSeries<Rational> r_series(std::size_t K, const Limits& limits)
{
    detail::check_degree(K, limits.max_exact_degree, "r_series");
    return product_series<Rational>(K, reciprocal_weight);
}

TruncatedSeries<BigInt> q_series(std::size_t K, const Limits& limits)
{
    detail::check_degree(K, limits.max_exact_degree, "q_series");
    return product_series<BigInt>(K, unit_weight);
}

Rational r_of(std::size_t k, const Limits& limits)
{
    // Factors with index above k cannot reach degree k.
    return r_series(k, limits).coeffs[k];
}

std::vector<double> r_series_float(std::size_t K, const Limits& limits)
{
    detail::check_degree(K, limits.max_float_degree, "r_series_float");
    // Neumaier summation per coefficient: sum[k] + comp[k] is the running value.
    std::vector<double> sum(K + 1, 0.0);
    std::vector<double> comp(K + 1, 0.0);
    sum[0] = 1.0;
    for (std::size_t n = 1; n <= K; ++n) {
        const double divisor = static_cast<double>(n);
        for (std::size_t k = K; k >= n; --k) {
            const double addend = (sum[k - n] + comp[k - n]) / divisor;
            const double t = sum[k] + addend;
            if (std::abs(sum[k]) >= std::abs(addend))
                comp[k] += (sum[k] - t) + addend;
            else
                comp[k] += (addend - t) + sum[k];
            sum[k] = t;
            if (k == n) break;
        }
    }
    for (std::size_t k = 0; k <= K; ++k) sum[k] += comp[k];
    return sum;
}

}  // namespace dpart
