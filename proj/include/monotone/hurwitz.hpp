#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "monotone/partition.hpp"
#include "monotone/rational.hpp"

namespace mtr {

// m = 2g - 2 + l(mu) + |mu|/q when that is a nonnegative integer; nullopt
// (count is zero) otherwise.
std::optional<long> transposition_count(long g, const Partition& mu, int q);

// Ground-truth counts straight from the definition: exhaustive enumeration of
// tuples (tau_0, tau_1, ..., tau_m), tau_0 in C_{(q,...,q)}, the tau_i a
// monotone sequence of transpositions, product in C_mu.  One enumeration per
// (d, q, m_max) serves every mu |- d and every smaller m, so results are
// cached per degree.
struct BruteGuard {
    int max_mu = 7;
    int max_m = 8;
};

class BruteForce {
public:
    using Guard = BruteGuard;

    explicit BruteForce(Guard guard = Guard()) : guard_(guard) {}

    Rational count_disconnected(long g, const Partition& mu, int q);
    Rational count_connected(long g, const Partition& mu, int q);

    const Guard& guard() const { return guard_; }

private:
    struct DepthCounts {
        // counts indexed by [m][cycle-type index in partitions_of(d)]
        std::vector<std::vector<std::int64_t>> all, transitive;
    };
    Rational count(long g, const Partition& mu, int q, bool connected);
    const DepthCounts& table(int d, int q, int m_max);

    Guard guard_;
    std::map<std::tuple<int, int, int>, DepthCounts> cache_;
};

} // namespace mtr
