#pragma once

// Coefficients of the products
//
//   R_n(x) = prod_{m=1}^{n} (1 + x^m / m) = sum_k r_n(k) x^k
//   Q_n(x) = prod_{m=1}^{n} (1 + x^m)     = sum_k q_n(k) x^k
//
// and of their infinite limits R(x), Q(x). The hot path multiplies one
// factor at a time into a single truncated row; the two-dimensional
// recurrences exist to cross-check it.

#include "dpart/errors.hpp"
#include "dpart/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dpart {

struct Limits {
    /// Upper bound on n_max * k_max for any CoeffTable.
    std::size_t cell_budget = 10'000'000;
    /// Largest K accepted by the exact series routines.
    std::size_t max_exact_degree = 5'000;
    /// Largest K accepted by r_series_float.
    std::size_t max_float_degree = 200'000;
};

enum class CoeffKind { Q, R };

/// Dense (n_max + 1) x (k_max + 1) grid, row n holding the coefficients of
/// the n-factor partial product. Entries beyond the triangular bound are
/// stored as explicit zeros.
template <class Scalar>
class CoeffTable {
public:
    CoeffTable(CoeffKind kind, std::size_t n_max, std::size_t k_max)
        : kind_(kind), n_max_(n_max), k_max_(k_max), entries_((n_max + 1) * (k_max + 1), Scalar(0))
    {
    }

    CoeffKind kind() const { return kind_; }
    std::size_t n_max() const { return n_max_; }
    std::size_t k_max() const { return k_max_; }

    const Scalar& operator()(std::size_t n, std::size_t k) const { return entries_[n * (k_max_ + 1) + k]; }
    Scalar& operator()(std::size_t n, std::size_t k) { return entries_[n * (k_max_ + 1) + k]; }

    std::vector<Scalar> row(std::size_t n) const
    {
        auto first = entries_.begin() + static_cast<std::ptrdiff_t>(n * (k_max_ + 1));
        return {first, first + static_cast<std::ptrdiff_t>(k_max_ + 1)};
    }

    friend bool operator==(const CoeffTable& a, const CoeffTable& b)
    {
        return a.kind_ == b.kind_ && a.n_max_ == b.n_max_ && a.k_max_ == b.k_max_ && a.entries_ == b.entries_;
    }

private:
    CoeffKind kind_;
    std::size_t n_max_;
    std::size_t k_max_;
    std::vector<Scalar> entries_;
};

using QTable = CoeffTable<BigInt>;
using RTable = CoeffTable<Rational>;

/// Coefficients c(0..K) of a power series truncated after degree K.
template <class Scalar>
struct TruncatedSeries {
    std::vector<Scalar> coeffs;

    std::size_t degree_bound() const { return coeffs.size() - 1; }
    const Scalar& operator[](std::size_t k) const { return coeffs[k]; }
};

/// q_n(k) by q_n(k) = sum_{m=1}^{n} q_{m-1}(k-m) for k >= n > 0.
QTable q_table(std::size_t n_max, std::size_t k_max, const Limits& limits = {});

/// r_n(k) by r_n(k) = sum_{m=1}^{n} r_{m-1}(k-m) / m for k >= n > 0.
RTable r_table(std::size_t n_max, std::size_t k_max, const Limits& limits = {});

/// Same field, row n built from row n-1 by r_n(k) = r_{n-1}(k) + r_{n-1}(k-n)/n.
RTable r_table_two_term(std::size_t n_max, std::size_t k_max, const Limits& limits = {});
QTable q_table_two_term(std::size_t n_max, std::size_t k_max, const Limits& limits = {});

/// Same field again, as snapshots of the in-place single-row product update.
RTable r_table_product(std::size_t n_max, std::size_t k_max, const Limits& limits = {});
QTable q_table_product(std::size_t n_max, std::size_t k_max, const Limits& limits = {});

/// r(0..K), multiplying (1 + x^n/n) for n = 1..K into a degree-K row.
TruncatedSeries<Rational> r_series(std::size_t K, const Limits& limits = {});

/// q(0..K), the number of partitions of k into distinct parts.
TruncatedSeries<BigInt> q_series(std::size_t K, const Limits& limits = {});

/// r(k) alone.
Rational r_of(std::size_t k, const Limits& limits = {});

/// r(0..K) in double precision with compensated accumulation.
std::vector<double> r_series_float(std::size_t K, const Limits& limits = {});

namespace detail {

void check_cells(std::size_t n_max, std::size_t k_max, const Limits& limits);
void check_degree(std::size_t K, std::size_t bound, const char* what);

/// Multiplies (1 + weight * x^n) into row in place, truncating at row.size()-1.
/// Descending k so every read sees the previous factor's value.
template <class Scalar, class Weight>
void multiply_factor(std::vector<Scalar>& row, std::size_t n, const Weight& weight)
{
    if (n >= row.size()) return;
    for (std::size_t k = row.size() - 1; k >= n; --k) {
        if (row[k - n] != 0) row[k] += weight * row[k - n];
        if (k == n) break;
    }
}

}  // namespace detail

}  // namespace dpart
