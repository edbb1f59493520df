#include "dpart/asymptotics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dpart {

double eval_R_partial(double x, std::size_t n)
{
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("eval_R_partial: x must lie in [0, 1]");
    double product = 1.0;
    double power = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        power *= x;
        product *= 1.0 + power / static_cast<double>(k);
    }
    return product;
}

std::size_t polylog_terms(double y, double tol)
{
    if (y == 0.0) return 0;
    // Smallest J with y^(J+1) / (1 - y) <= tol.
    const double j = std::log(tol * (1.0 - y)) / std::log(y) - 1.0;
    return j <= 1.0 ? 1 : static_cast<std::size_t>(std::ceil(j));
}

double polylog(int s, double y, double tol)
{
    if (s < 1) throw std::invalid_argument("polylog: order must be >= 1");
    if (!(y >= 0.0 && y < 1.0)) throw std::invalid_argument("polylog: argument must lie in [0, 1)");
    if (!(tol > 0.0)) throw std::invalid_argument("polylog: tol must be positive");

    const std::size_t terms = polylog_terms(y, tol);
    // Summed back to front so the small tail terms are not swamped.
    double sum = 0.0;
    for (std::size_t j = terms; j >= 1; --j) {
        const double jd = static_cast<double>(j);
        sum += std::pow(y, jd) / std::pow(jd, s);
    }
    return sum;
}

double eval_lnR_series(double x, std::size_t terms, double tol)
{
    if (!(x >= 0.0 && x < 1.0)) throw std::invalid_argument("eval_lnR_series: x must lie in [0, 1)");
    if (terms == 0) throw std::invalid_argument("eval_lnR_series: terms must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("eval_lnR_series: tol must be positive");

    // Column s collects the s-th Mercator term of every row ln(1 + x^k/k).
    double sum = -std::log1p(-x);
    for (std::size_t s = 2; s <= terms; ++s) {
        const double column = polylog(static_cast<int>(s), std::pow(x, static_cast<double>(s)), tol);
        sum += (s % 2 == 0 ? -column : column) / static_cast<double>(s);
    }
    return sum;
}

std::size_t adequate_truncation(double x)
{
    if (!(x >= 0.0 && x < 1.0)) throw std::invalid_argument("adequate_truncation: x must lie in [0, 1)");
    // The relative slack keeps x = 0.9 at 500 despite 1 - 0.9 rounding low.
    return static_cast<std::size_t>(std::ceil(50.0 / (1.0 - x) * (1.0 - 1e-12)));
}

double limit_probe(double x, std::size_t n)
{
    if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("limit_probe: x must lie in (0, 1)");
    const std::size_t needed = adequate_truncation(x);
    if (n < needed)
        throw InadequateTruncationError("limit_probe: n = " + std::to_string(n) + " is below " +
                                        std::to_string(needed) + " for x = " + std::to_string(x));
    return (1.0 - x) * eval_R_partial(x, n);
}

}  // namespace dpart
