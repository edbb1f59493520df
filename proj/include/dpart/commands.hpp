#pragma once

// Output side of the command-line tool. Every writer is deterministic:
// identical arguments produce byte-identical output. Data goes to `out`;
// callers route diagnostics elsewhere.

#include "dpart/coefficients.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>

namespace dpart::cli {

inline constexpr int kDefaultDigits = 7;
inline constexpr std::size_t kMaxFigureK = 2000;
inline constexpr long long kCrossCheckTerms = 10'000'000;

/// Fixed-point rendering with `digits` decimals.
std::string format_fixed(double value, int digits);

/// CSV "k,r" for k = 0..max_k; exact rows render "p/q".
void write_r(std::ostream& out, std::size_t max_k, bool exact, int digits = kDefaultDigits, const Limits& limits = {});

/// CSV "k,q" for k = 0..max_k.
void write_q(std::ostream& out, std::size_t max_k, const Limits& limits = {});

/// which = 1: Delta_m / C_m for m = 1..13; 2: q_n(k); 3: r_n(k), 0 <= n <= 5, 0 <= k <= 16.
/// Rows are ", "-separated with a header line. Throws std::invalid_argument for other values.
void write_table(std::ostream& out, int which, int digits = kDefaultDigits);

/// Report for a fixed number of terms m: every Delta_j, C_j up to m, then
/// the final value, its bound, and the harmonic-sum cross-check.
void write_constant_terms(std::ostream& out, int terms, int digits = kDefaultDigits,
                          long long oracle_terms = kCrossCheckTerms);

/// Report for a target tolerance, via constant_c.
void write_constant_tol(std::ostream& out, double tol, int digits = kDefaultDigits,
                        long long oracle_terms = kCrossCheckTerms);

/// CSV "k,r,C" for k = 0..max_k (max_k <= 2000), float pipeline, C = constant_c(1e-8).
void write_figure(std::ostream& out, std::size_t max_k, int digits = kDefaultDigits);

}  // namespace dpart::cli
