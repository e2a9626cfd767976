#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "monotone/rational.hpp"

namespace mtr {

// Integer partition: weakly decreasing positive parts.
using Partition = std::vector<int>;

inline bool partition_valid(const Partition& p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

inline int partition_size(const Partition& p)
{
    int s = 0;
    for (int x : p) s += x;
    return s;
}

inline int partition_length(const Partition& p) { return static_cast<int>(p.size()); }

inline std::map<int, int> part_multiplicities(const Partition& p)
{
    std::map<int, int> m;
    for (int x : p) m[x]++;
    return m;
}

// |Aut(mu)| = prod over part values of (multiplicity)!
inline Integer partition_aut(const Partition& p)
{
    Integer a = 1;
    for (auto& [v, m] : part_multiplicities(p)) {
        (void)v;
        a *= factorial(m);
    }
    return a;
}

// z_mu = prod k^{m_k} m_k!  (centralizer order of the conjugacy class)
inline Integer partition_zmu(const Partition& p)
{
    Integer z = 1;
    for (auto& [v, m] : part_multiplicities(p)) {
        for (int i = 0; i < m; ++i) z *= v;
        z *= factorial(m);
    }
    return z;
}

inline Partition partition_conjugate(const Partition& p)
{
    Partition c;
    if (p.empty()) return c;
    for (int j = 1; j <= p[0]; ++j) {
        int cnt = 0;
        for (int x : p)
            if (x >= j) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

// Box contents of the Young diagram, normalized so that contents of the row
// partition (2) are {0, 1} (the sign convention the partition function needs:
// the one-row diagram carries nonnegative contents).
inline std::vector<int> partition_contents(const Partition& p)
{
    std::vector<int> cs;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 1; j <= p[i]; ++j) cs.push_back(j - 1 - static_cast<int>(i));
    return cs;
}

namespace detail {
inline void gen_partitions(int n, int maxpart, Partition& cur, std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}
} // namespace detail

// All partitions of n in descending lexicographic order ((n), (n-1,1), ...).
inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    Partition cur;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    detail::gen_partitions(n, n, cur, out);
    return out;
}

// Lookup table mapping a partition to its index in partitions_of(n).
class PartitionIndex {
public:
    explicit PartitionIndex(int n) : list_(partitions_of(n))
    {
        for (std::size_t i = 0; i < list_.size(); ++i) pos_[list_[i]] = i;
    }
    const std::vector<Partition>& list() const { return list_; }
    std::size_t size() const { return list_.size(); }
    std::size_t index(const Partition& p) const
    {
        auto it = pos_.find(p);
        if (it == pos_.end()) throw Error("PartitionIndex: unknown partition");
        return it->second;
    }

private:
    std::vector<Partition> list_;
    std::map<Partition, std::size_t> pos_;
};

} // namespace mtr
