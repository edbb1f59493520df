#include "dpart/constant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dpart {

namespace {

constexpr long kZetaTerms = 10'000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double v)
    {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace

double c_from_delta(double delta) { return 2.0 / std::exp(1.0 + delta); }

ZetaValue zeta_minus_one(int k, double tol)
{
    if (k < 2) throw std::invalid_argument("zeta_minus_one: k must be >= 2, got " + std::to_string(k));
    if (!(tol >= 1e-15 && tol <= 1e-3))
        throw std::invalid_argument("zeta_minus_one: tol must lie in [1e-15, 1e-3]");

    const double s = static_cast<double>(k);
    const double n = static_cast<double>(kZetaTerms);

    // Smallest terms first.
    CompensatedSum sum;
    for (long j = kZetaTerms; j >= 2; --j) sum.add(std::pow(static_cast<double>(j), -s));

    const double n_pow = std::pow(n, -s);
    const double integral = n * n_pow / (s - 1.0);
    const double half = 0.5 * n_pow;
    const double bernoulli2 = s * n_pow / (12.0 * n);
    sum.add(integral - half + bernoulli2);

    ZetaValue z;
    z.k = k;
    z.value_minus_one = sum.value();
    // Next Euler-Maclaurin term is k(k+1)(k+2) N^-(k+3) / 720; the remainder
    // is bounded by it in magnitude, doubled for slack. Rounding in the
    // compensated sum stays within a few ulps of the result.
    const double next_term = s * (s + 1.0) * (s + 2.0) * n_pow / (720.0 * n * n * n);
    z.error_bound = 2.0 * next_term + 4.0 * kEps * z.value_minus_one;
    return z;
}

DeltaApproximation delta_m(int m, double tol)
{
    if (m < 1) throw std::invalid_argument("delta_m: m must be >= 1");
    DeltaApproximation d;
    d.m = m;
    const double zeta_tol = std::clamp(tol / m, 1e-15, 1e-3);
    CompensatedSum sum;
    for (int k = 2; k <= m; ++k) {
        const ZetaValue z = zeta_minus_one(k, zeta_tol);
        const double term = z.value_minus_one / k;
        sum.add(k % 2 == 0 ? term : -term);
        d.zeta_error += z.error_bound / k;
    }
    d.delta_m = sum.value();
    d.c_m = c_from_delta(d.delta_m);
    return d;
}

double delta_tail_bound(int m)
{
    if (m < 1) throw std::invalid_argument("delta_tail_bound: m must be >= 1");
    return zeta_minus_one(m + 1).value_minus_one / (m + 1);
}

ConstantEstimate constant_c(double tol)
{
    if (!(tol >= 1e-12 && tol <= 1e-2)) throw std::invalid_argument("constant_c: tol must lie in [1e-12, 1e-2]");

    // Build Delta_m incrementally; the next zeta value doubles as the tail bound.
    CompensatedSum delta;
    double zeta_error = 0.0;
    ZetaValue next = zeta_minus_one(2);
    for (int m = 1;; ++m) {
        const double tail = next.value_minus_one / (m + 1) + next.error_bound / (m + 1);
        const double c_m = c_from_delta(delta.value());
        const double bound = c_m * std::expm1(tail + zeta_error) + 4.0 * kEps * c_m;
        if (bound <= tol) return ConstantEstimate{c_m, bound, m, ConstantMethod::zeta_series};

        const int k = m + 1;
        const double term = next.value_minus_one / k;
        delta.add(k % 2 == 0 ? term : -term);
        zeta_error += next.error_bound / k;
        next = zeta_minus_one(k + 1);
    }
}

ConstantEstimate harmonic_oracle(long long N)
{
    if (N < 2) throw std::invalid_argument("harmonic_oracle: N must be >= 2");
    CompensatedSum delta;
    for (long long j = N; j >= 2; --j) {
        const double inv = 1.0 / static_cast<double>(j);
        delta.add(inv - std::log1p(inv));
    }
    ConstantEstimate e;
    e.value = c_from_delta(delta.value());
    // Omitted terms are each below 1/(2 j^2); their sum is below 1/(2N).
    // Rounding 1/j costs about eps/j per summand, eps (ln N + 1) overall.
    const double tail = 0.5 / static_cast<double>(N);
    const double rounding = 2.0 * kEps * (std::log(static_cast<double>(N)) + 2.0);
    e.error_bound = e.value * std::expm1(tail + rounding);
    e.terms_used = N;
    e.method = ConstantMethod::harmonic_oracle;
    return e;
}

}  // namespace dpart
