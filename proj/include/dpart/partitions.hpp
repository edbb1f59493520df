#pragma once

// Brute-force partitions of k into distinct parts. Exponential in sqrt(k);
// these are reference answers for the series engine, not a fast path.

#include "dpart/errors.hpp"
#include "dpart/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dpart {

inline constexpr std::size_t kDefaultEnumerationBound = 60;

/// A set of distinct positive integers, stored strictly increasing.
struct Partition {
    std::vector<unsigned> parts;

    unsigned long sum() const;
    bool is_strictly_increasing() const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Every partition of k into distinct parts, exactly once. Ordered by number
/// of parts, then lexicographically within one part count, so 5 gives
/// {5}, {1,4}, {2,3}. k = 0 yields the single empty partition.
/// Throws BoundExceededError when k > bound.
std::vector<Partition> enum_distinct_partitions(std::size_t k, std::size_t bound = kDefaultEnumerationBound);

/// 1 / prod(parts). Throws std::domain_error on the empty partition.
Rational ip(const Partition& s);

/// r(k) as the sum of ip(S) over all S; r(0) = 1.
Rational r_oracle(std::size_t k, std::size_t bound = kDefaultEnumerationBound);

/// Number of partitions of k into distinct parts.
std::uint64_t q_oracle(std::size_t k, std::size_t bound = kDefaultEnumerationBound);

}  // namespace dpart
