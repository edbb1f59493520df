#include "dpart/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dpart {

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_normalized(const Rational& q)
{
    if (sgn(q.get_den()) <= 0) return false;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return g == 1 || (q.get_num() == 0 && q.get_den() == 1);
}

std::string render(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string render(const BigInt& z) { return z.get_str(); }

namespace {

BigInt parse_integer(std::string_view text, bool allow_sign)
{
    std::size_t i = 0;
    if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) throw std::invalid_argument("empty integer");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw std::invalid_argument("bad digit in '" + std::string(text) + "'");
    std::string digits(text.substr(i));
    BigInt z(digits, 10);
    return text[0] == '-' ? BigInt(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
    BigInt num = parse_integer(text.substr(0, slash), true);
    BigInt den = parse_integer(text.substr(slash + 1), false);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

double to_double(const Rational& q)
{
    // Truncates toward zero, so the result is within one ulp.
    return q.get_d();
}

}  // namespace dpart
