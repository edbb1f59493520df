#pragma once

// Real-variable side of R(x) = prod_{k>=1} (1 + x^k/k): partial products,
// the column-summed logarithm expansion, and the (1-x) R(x) limit probe.

#include "dpart/errors.hpp"

#include <cstddef>

namespace dpart {

/// R_n(x) = prod_{k=1}^{n} (1 + x^k/k), multiplied left to right. 0 <= x <= 1.
double eval_R_partial(double x, std::size_t n);

/// Li_s(y) = sum_{j>=1} y^j / j^s for 0 <= y < 1, summed until the
/// remaining tail (bounded by y^(J+1)/(1-y)) is at most tol. s >= 1.
double polylog(int s, double y, double tol);

/// Number of polylog terms polylog(s, y, tol) will sum.
std::size_t polylog_terms(double y, double tol);

/// ln R(x) ~ sum_{s=1}^{terms} (-1)^(s+1)/s * Li_s(x^s), with Li_1(x) = -ln(1-x).
/// Requires 0 <= x < 1, terms >= 1, tol > 0.
double eval_lnR_series(double x, std::size_t terms, double tol);

/// Smallest n accepted by limit_probe at x: ceil(50 / (1 - x)).
std::size_t adequate_truncation(double x);

/// (1 - x) R_n(x) for 0 < x < 1. Throws InadequateTruncationError when
/// n < adequate_truncation(x).
double limit_probe(double x, std::size_t n);

}  // namespace dpart
