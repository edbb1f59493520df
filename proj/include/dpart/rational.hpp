#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dpart {

using BigInt = mpz_class;

// mpq_class keeps numerator and denominator coprime with a positive
// denominator after every arithmetic operation. Values built from raw
// num/den pairs must go through make_rational.
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// True iff gcd(|num|, den) == 1 and den >= 1.
bool is_normalized(const Rational& q);

/// "p/q", or "p" when the denominator is 1.
std::string render(const Rational& q);
std::string render(const BigInt& z);

/// Inverse of render. Accepts "p", "p/q" and a leading sign; rejects
/// zero denominators and anything else with std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Double approximation, within one ulp for any magnitude.
double to_double(const Rational& q);

}  // namespace dpart
