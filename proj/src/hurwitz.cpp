#include "monotone/hurwitz.hpp"

#include <algorithm>
#include <numeric>

#include "monotone/errors.hpp"

namespace mtr {

std::optional<long> transposition_count(long g, const Partition& mu, int q)
{
    if (g < 0 || q < 1) throw Error("transposition_count: need g >= 0, q >= 1");
    int d = partition_size(mu);
    if (d % q != 0) return std::nullopt;
    long m = 2 * g - 2 + partition_length(mu) + d / q;
    if (m < 0) return std::nullopt;
    return m;
}

namespace {

// Permutations on {0..d-1} as image arrays.
using Perm = std::vector<int>;

// All permutations with cycle type (q, q, ..., q).  Each cycle is opened by
// the smallest unplaced element, which makes the enumeration duplicate-free.
void gen_uniform_class(int d, int q, std::vector<bool>& used, std::vector<int>& cyc, Perm& img,
                       std::vector<Perm>& out)
{
    if (static_cast<int>(cyc.size()) == q) {
        for (int i = 0; i < q; ++i)
            img[static_cast<std::size_t>(cyc[static_cast<std::size_t>(i)])] =
                cyc[static_cast<std::size_t>((i + 1) % q)];
        int leader = -1;
        for (int i = 0; i < d; ++i)
            if (!used[static_cast<std::size_t>(i)]) {
                leader = i;
                break;
            }
        if (leader < 0) {
            out.push_back(img);
            return;
        }
        used[static_cast<std::size_t>(leader)] = true;
        std::vector<int> next{leader};
        gen_uniform_class(d, q, used, next, img, out);
        used[static_cast<std::size_t>(leader)] = false;
        return;
    }
    for (int i = 0; i < d; ++i) {
        if (used[static_cast<std::size_t>(i)]) continue;
        used[static_cast<std::size_t>(i)] = true;
        cyc.push_back(i);
        gen_uniform_class(d, q, used, cyc, img, out);
        cyc.pop_back();
        used[static_cast<std::size_t>(i)] = false;
    }
}

std::vector<Perm> uniform_class(int d, int q)
{
    std::vector<Perm> out;
    if (d % q != 0) return out;
    Perm img(static_cast<std::size_t>(d));
    if (d == 0) {
        out.push_back(img);
        return out;
    }
    std::vector<bool> used(static_cast<std::size_t>(d), false);
    used[0] = true;
    std::vector<int> cyc{0};
    gen_uniform_class(d, q, used, cyc, img, out);
    return out;
}

// Union-find over {0..d-1} with rollback, tracking component count.
class Dsu {
public:
    explicit Dsu(int d) : parent_(static_cast<std::size_t>(d)), size_(static_cast<std::size_t>(d), 1), comps_(d)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) const
    {
        while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
        return x;
    }
    // Returns true if a merge happened (needs undo later).
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            trail_.push_back(-1);
            return false;
        }
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        trail_.push_back(b);
        --comps_;
        return true;
    }
    void undo()
    {
        int b = trail_.back();
        trail_.pop_back();
        if (b < 0) return;
        int a = parent_[static_cast<std::size_t>(b)];
        parent_[static_cast<std::size_t>(b)] = b;
        size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
        ++comps_;
    }
    int components() const { return comps_; }

private:
    std::vector<int> parent_, size_;
    std::vector<int> trail_;
    int comps_;
};

std::uint64_t cycle_type_key(const Perm& p)
{
    int d = static_cast<int>(p.size());
    std::vector<int> lens;
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int i = 0; i < d; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = p[static_cast<std::size_t>(j)];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    std::uint64_t key = 0;
    for (int len : lens) key = key * 32 + static_cast<std::uint64_t>(len);
    return key;
}

} // namespace

const BruteForce::DepthCounts& BruteForce::table(int d, int q, int m_max)
{
    auto key = std::make_tuple(d, q, m_max);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    PartitionIndex pidx(d);
    std::map<std::uint64_t, std::size_t> type_index;
    for (std::size_t i = 0; i < pidx.size(); ++i) {
        std::uint64_t k = 0;
        for (int len : pidx.list()[i]) k = k * 32 + static_cast<std::uint64_t>(len);
        type_index[k] = i;
    }

    DepthCounts dc;
    dc.all.assign(static_cast<std::size_t>(m_max) + 1, std::vector<std::int64_t>(pidx.size(), 0));
    dc.transitive = dc.all;

    for (const Perm& tau0 : uniform_class(d, q)) {
        Perm cur = tau0;
        Perm inv(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) inv[static_cast<std::size_t>(cur[static_cast<std::size_t>(i)])] = i;

        Dsu dsu(d);
        int tau0_unions = 0;
        for (int i = 0; i < d; ++i)
            if (dsu.unite(i, tau0[static_cast<std::size_t>(i)])) ++tau0_unions;
        // tau0's self-loops pushed trail entries too; count all for undo
        int tau0_trail = d;

        // DFS over monotone sequences: at depth j the current product is a
        // length-j prefix; record its class at every depth.
        struct Level {
            int a, b; // transposition applied at this level (for undo)
        };
        std::vector<Level> stack;
        // next candidate (a, b) per level, encoded as a*d + b scan order with b outer
        auto record = [&](int depth) {
            std::size_t idx = type_index.at(cycle_type_key(cur));
            dc.all[static_cast<std::size_t>(depth)][idx]++;
            if (dsu.components() == 1) dc.transitive[static_cast<std::size_t>(depth)][idx]++;
        };

        // recursive lambda DFS
        auto dfs = [&](auto&& self, int depth, int b_min) -> void {
            record(depth);
            if (depth == m_max) return;
            for (int b = b_min; b < d; ++b) {
                for (int a = 0; a < b; ++a) {
                    // apply transposition (a,b) on the right of cur
                    int ia = inv[static_cast<std::size_t>(a)], ib = inv[static_cast<std::size_t>(b)];
                    cur[static_cast<std::size_t>(ia)] = b;
                    cur[static_cast<std::size_t>(ib)] = a;
                    inv[static_cast<std::size_t>(a)] = ib;
                    inv[static_cast<std::size_t>(b)] = ia;
                    dsu.unite(a, b);
                    self(self, depth + 1, b);
                    dsu.undo();
                    // undo the transposition (it is an involution on the product)
                    cur[static_cast<std::size_t>(ia)] = a;
                    cur[static_cast<std::size_t>(ib)] = b;
                    inv[static_cast<std::size_t>(a)] = ia;
                    inv[static_cast<std::size_t>(b)] = ib;
                }
            }
        };
        dfs(dfs, 0, 1);

        for (int i = 0; i < tau0_trail; ++i) dsu.undo();
    }

    auto [pos, inserted] = cache_.emplace(key, std::move(dc));
    (void)inserted;
    return pos->second;
}

Rational BruteForce::count(long g, const Partition& mu, int q, bool connected)
{
    if (!partition_valid(mu)) throw Error("count: invalid partition");
    int d = partition_size(mu);
    auto m_opt = transposition_count(g, mu, q);
    if (!m_opt) return 0;
    long m = *m_opt;
    if (d > guard_.max_mu) throw SizeGuardError("brute force: |mu| exceeds guard");
    if (m > guard_.max_m) throw SizeGuardError("brute force: m exceeds guard");
    if (d == 0) return m == 0 ? Rational(1) : Rational(0);

    const DepthCounts& dc = table(d, q, guard_.max_m);
    PartitionIndex pidx(d);
    std::size_t idx = pidx.index(mu);
    std::int64_t raw = connected ? dc.transitive[static_cast<std::size_t>(m)][idx]
                                 : dc.all[static_cast<std::size_t>(m)][idx];
    return Rational(partition_aut(mu) * raw, factorial(d));
}

Rational BruteForce::count_disconnected(long g, const Partition& mu, int q)
{
    return count(g, mu, q, false);
}

Rational BruteForce::count_connected(long g, const Partition& mu, int q)
{
    return count(g, mu, q, true);
}

} // namespace mtr
