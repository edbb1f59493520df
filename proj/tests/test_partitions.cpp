#include "dpart/partitions.hpp"

#include "dpart/coefficients.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace dpart;

namespace {

Partition p(std::initializer_list<unsigned> parts) { return Partition{parts}; }

}  // namespace

TEST_CASE("enumeration examples")
{
    CHECK(enum_distinct_partitions(5) == std::vector<Partition>{p({5}), p({1, 4}), p({2, 3})});
    CHECK(enum_distinct_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enum_distinct_partitions(3) == std::vector<Partition>{p({3}), p({1, 2})});
    CHECK(enum_distinct_partitions(6) == std::vector<Partition>{p({6}), p({1, 5}), p({2, 4}), p({1, 2, 3})});
    CHECK(enum_distinct_partitions(1) == std::vector<Partition>{p({1})});
    CHECK(enum_distinct_partitions(2) == std::vector<Partition>{p({2})});
}

TEST_CASE("every partition is valid and appears once")
{
    const auto counts = q_series(40);
    for (std::size_t k = 0; k <= 40; ++k) {
        CAPTURE(k);
        const auto all = enum_distinct_partitions(k);
        std::set<std::vector<unsigned>> seen;
        std::size_t previous_size = 0;
        for (const auto& s : all) {
            CHECK(s.is_strictly_increasing());
            CHECK(s.sum() == k);
            CHECK(seen.insert(s.parts).second);
            // m distinct parts need a sum of at least m(m+1)/2.
            CHECK(s.parts.size() * (s.parts.size() + 1) / 2 <= k);
            if (!s.parts.empty()) CHECK(s.parts.back() <= k);
            CHECK(s.parts.size() >= previous_size);
            previous_size = s.parts.size();
        }
        CHECK(all.size() == counts[k]);
    }
}

TEST_CASE("ip")
{
    CHECK(ip(p({2, 3})) == Rational(1, 6));
    CHECK(ip(p({1, 4})) == Rational(1, 4));
    CHECK(ip(p({1, 2, 3})) == Rational(1, 6));
    CHECK_THROWS_AS(ip(Partition{}), std::domain_error);
}

TEST_CASE("oracles")
{
    CHECK(r_oracle(0) == 1);
    CHECK(r_oracle(3) == Rational(5, 6));
    CHECK(r_oracle(5) == Rational(37, 60));
    CHECK(r_oracle(6) == Rational(79, 120));
    CHECK(q_oracle(6) == 4);
    CHECK(q_oracle(0) == 1);
    CHECK(q_oracle(10) == 10);
}

TEST_CASE("oracles agree with the series engine")
{
    const auto r = r_series(30);
    const auto q = q_series(30);
    for (std::size_t k = 0; k <= 30; ++k) {
        CAPTURE(k);
        CHECK(r_oracle(k) == r[k]);
        CHECK(q[k] == q_oracle(k));
    }
}

TEST_CASE("enumeration bound")
{
    CHECK_THROWS_AS(enum_distinct_partitions(61), BoundExceededError);
    CHECK_THROWS_AS(r_oracle(61), BoundExceededError);
    CHECK_THROWS_AS(q_oracle(61), BoundExceededError);
    CHECK_THROWS_AS(q_oracle(11, 10), BoundExceededError);
    CHECK(q_oracle(61, 70) == q_series(61)[61]);
    // 60 is the default bound and must still be accepted.
    CHECK(q_oracle(60) == 10880);
    CHECK(q_series(60)[60] == 10880);
}
