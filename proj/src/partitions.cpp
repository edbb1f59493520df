#include "dpart/partitions.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace dpart {

unsigned long Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0UL); }

bool Partition::is_strictly_increasing() const
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i > 0 && parts[i] <= parts[i - 1]) return false;
    }
    return true;
}

namespace {

void check_bound(std::size_t k, std::size_t bound)
{
    if (k > bound)
        throw BoundExceededError("partition enumeration: k = " + std::to_string(k) + " exceeds the bound " +
                                 std::to_string(bound));
}

// Appends every way to finish `prefix` with `slots` more parts, each larger
// than the previous one, summing to `remaining`. Smallest part first.
void descend(std::vector<unsigned>& prefix, unsigned min_part, std::size_t remaining, std::size_t slots,
             std::vector<Partition>& out)
{
    if (slots == 0) {
        if (remaining == 0) out.push_back(Partition{prefix});
        return;
    }
    if (slots == 1) {
        if (remaining >= min_part) {
            prefix.push_back(static_cast<unsigned>(remaining));
            out.push_back(Partition{prefix});
            prefix.pop_back();
        }
        return;
    }
    // The remaining slots-1 parts exceed `part`, so they need at least
    // (slots-1)*part + (slots-1)*slots/2.
    for (unsigned part = min_part;; ++part) {
        const std::size_t rest = slots - 1;
        const std::size_t needed = part + rest * part + rest * (rest + 1) / 2;
        if (needed > remaining) break;
        prefix.push_back(part);
        descend(prefix, part + 1, remaining - part, rest, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enum_distinct_partitions(std::size_t k, std::size_t bound)
{
    check_bound(k, bound);
    std::vector<Partition> out;
    if (k == 0) {
        out.push_back(Partition{});
        return out;
    }
    std::vector<unsigned> prefix;
    // m distinct parts need k >= m(m+1)/2.
    for (std::size_t slots = 1; slots * (slots + 1) / 2 <= k; ++slots) descend(prefix, 1, k, slots, out);
    return out;
}

Rational ip(const Partition& s)
{
    if (s.parts.empty()) throw std::domain_error("ip of the empty partition");
    BigInt product = 1;
    for (unsigned part : s.parts) product *= part;
    return Rational(BigInt(1), product);
}

Rational r_oracle(std::size_t k, std::size_t bound)
{
    check_bound(k, bound);
    if (k == 0) return Rational(1);
    Rational sum = 0;
    for (const auto& s : enum_distinct_partitions(k, bound)) sum += ip(s);
    return sum;
}

std::uint64_t q_oracle(std::size_t k, std::size_t bound)
{
    return enum_distinct_partitions(k, bound).size();
}

}  // namespace dpart
