#pragma once

// The limit constant C = 2 / exp(1 + Delta), where
//   Delta = sum_{k>=2} (-1)^k (zeta(k) - 1) / k,
// evaluated two independent ways: through zeta values with an
// alternating-series truncation bound, and through a harmonic-sum
// rearrangement that never touches zeta.

#include <cstddef>

namespace dpart {

struct ZetaValue {
    int k = 0;
    double value_minus_one = 0.0;  ///< zeta(k) - 1
    double error_bound = 0.0;
};

struct DeltaApproximation {
    int m = 0;
    double delta_m = 0.0;
    double c_m = 0.0;
    /// Accumulated zeta evaluation error inside delta_m.
    double zeta_error = 0.0;
};

enum class ConstantMethod { zeta_series, harmonic_oracle };

struct ConstantEstimate {
    double value = 0.0;
    double error_bound = 0.0;
    long long terms_used = 0;
    ConstantMethod method = ConstantMethod::zeta_series;
};

/// zeta(k) - 1 by direct summation of j^-k for j = 2..10^4 plus the
/// Euler-Maclaurin tail N^(1-k)/(k-1) - N^-k/2 + k N^-(k+1)/12.
/// Requires k >= 2 and 1e-15 <= tol <= 1e-3 (std::invalid_argument otherwise).
ZetaValue zeta_minus_one(int k, double tol = 1e-15);

/// Delta_m = sum_{k=2}^{m} (-1)^k (zeta(k)-1)/k (zero for m = 1) and
/// C_m = 2/exp(1 + Delta_m). Each zeta value is evaluated to tol/m.
DeltaApproximation delta_m(int m, double tol = 1e-12);

/// (zeta(m+1) - 1)/(m+1): the first omitted term, which bounds |Delta - Delta_m|.
double delta_tail_bound(int m);

/// C to within tol (1e-12 <= tol <= 1e-2), using the smallest m whose
/// propagated bound C_m (exp(b) - 1), b = tail + zeta error, is <= tol.
ConstantEstimate constant_c(double tol);

/// C from Delta_N = sum_{j=2}^{N} (1/j - ln(1 + 1/j)) = H_N - 1 - ln((N+1)/2).
/// The partial sums increase to Delta with a tail below 1/(2N).
ConstantEstimate harmonic_oracle(long long N);

/// 2 / exp(1 + delta)
double c_from_delta(double delta);

}  // namespace dpart
