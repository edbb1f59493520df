#include "dpart/rational.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace dpart;

TEST_CASE("make_rational reduces to lowest terms")
{
    const auto q = make_rational(BigInt(-12), BigInt(-18));
    CHECK(q.get_num() == 2);
    CHECK(q.get_den() == 3);
    CHECK(is_normalized(q));

    const auto neg = make_rational(BigInt(4), BigInt(-6));
    CHECK(neg.get_num() == -2);
    CHECK(neg.get_den() == 3);

    CHECK(make_rational(BigInt(0), BigInt(7)).get_den() == 1);
    CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("render uses p/q and drops unit denominators")
{
    CHECK(render(make_rational(BigInt(37), BigInt(60))) == "37/60");
    CHECK(render(Rational(1)) == "1");
    CHECK(render(Rational(0)) == "0");
    CHECK(render(make_rational(BigInt(-1), BigInt(8))) == "-1/8");
}

TEST_CASE("parse_rational rejects malformed input")
{
    CHECK(parse_rational("59/120") == Rational(59, 120));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("/3"), std::invalid_argument);
}

TEST_CASE("render/parse round-trip on random rationals")
{
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<long> num(-1'000'000'000, 1'000'000'000);
    std::uniform_int_distribution<long> den(1, 1'000'000'000);
    for (int i = 0; i < 2000; ++i) {
        // Products push values well past 64 bits.
        const auto q = make_rational(BigInt(num(rng)) * num(rng), BigInt(den(rng)) * den(rng));
        REQUIRE(is_normalized(q));
        CHECK(parse_rational(render(q)) == q);
    }
}

TEST_CASE("to_double is within one ulp")
{
    CHECK(to_double(Rational(37, 60)) == doctest::Approx(37.0 / 60.0).epsilon(1e-15));
    BigInt huge = 1;
    for (int i = 0; i < 400; ++i) huge *= 10;
    CHECK(to_double(Rational(huge + 1, huge * 3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}
