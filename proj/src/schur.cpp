#include "monotone/schur.hpp"

#include <algorithm>

#include "monotone/errors.hpp"

namespace mtr {

void PowerSumPoly::add(const Partition& mu, const Rational& c)
{
    if (partition_size(mu) > weight_cut) return;
    auto& slot = terms[mu];
    slot += c;
    if (slot == 0) terms.erase(mu);
}

PowerSumPoly operator+(const PowerSumPoly& a, const PowerSumPoly& b)
{
    PowerSumPoly r(std::min(a.weight_cut, b.weight_cut));
    for (auto& [mu, c] : a.terms) r.add(mu, c);
    for (auto& [mu, c] : b.terms) r.add(mu, c);
    return r;
}

PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b)
{
    PowerSumPoly r(std::min(a.weight_cut, b.weight_cut));
    for (auto& [m1, c1] : a.terms)
        for (auto& [m2, c2] : b.terms) {
            Partition m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            std::sort(m.begin(), m.end(), std::greater<int>());
            r.add(m, c1 * c2);
        }
    return r;
}

bool PowerSumPoly::operator==(const PowerSumPoly& o) const { return terms == o.terms; }

namespace {

// Beta-set of a partition padded to `rows` rows: beta_i = lambda_i + rows - 1 - i,
// strictly decreasing.
std::vector<int> beta_set(const Partition& lam, int rows)
{
    std::vector<int> b(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        int li = i < static_cast<int>(lam.size()) ? lam[static_cast<std::size_t>(i)] : 0;
        b[static_cast<std::size_t>(i)] = li + rows - 1 - i;
    }
    return b;
}

Partition from_beta(std::vector<int> b)
{
    std::sort(b.begin(), b.end(), std::greater<int>());
    Partition lam;
    int rows = static_cast<int>(b.size());
    for (int i = 0; i < rows; ++i) {
        int li = b[static_cast<std::size_t>(i)] - (rows - 1 - i);
        if (li > 0) lam.push_back(li);
    }
    return lam;
}

// All removals of a border strip of length r: (resulting partition, height sign).
std::vector<std::pair<Partition, int>> strip_removals(const Partition& lam, int r)
{
    std::vector<std::pair<Partition, int>> out;
    int rows = std::max<int>(static_cast<int>(lam.size()), 1);
    auto b = beta_set(lam, rows);
    for (std::size_t j = 0; j < b.size(); ++j) {
        int target = b[j] - r;
        if (target < 0) continue;
        if (std::find(b.begin(), b.end(), target) != b.end()) continue;
        int height = 0;
        for (int x : b)
            if (x > target && x < b[j]) ++height;
        auto nb = b;
        nb[j] = target;
        out.emplace_back(from_beta(std::move(nb)), height % 2 == 0 ? 1 : -1);
    }
    return out;
}

// Shared memoized character evaluator: chi(lambda, rest) with rest's parts
// processed largest-first.
struct CharMemo {
    std::map<std::pair<Partition, Partition>, std::int64_t> memo;

    std::int64_t chi(const Partition& lam, const Partition& mu)
    {
        if (mu.empty()) return lam.empty() ? 1 : 0;
        auto key = std::make_pair(lam, mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int r = mu[0];
        Partition rest(mu.begin() + 1, mu.end());
        std::int64_t v = 0;
        for (auto& [sub, sign] : strip_removals(lam, r)) v += sign * chi(sub, rest);
        memo.emplace(std::move(key), v);
        return v;
    }
};

CharMemo& char_memo()
{
    static CharMemo m;
    return m;
}

} // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& mu)
{
    if (!partition_valid(lambda) || !partition_valid(mu)) throw Error("mn_character: invalid partition");
    if (partition_size(lambda) != partition_size(mu))
        throw SizeMismatchError("mn_character: |lambda| != |mu|");
    return char_memo().chi(lambda, mu);
}

PowerSumPoly schur_in_p(const Partition& lambda, int W)
{
    int n = partition_size(lambda);
    if (n > W) throw CutoffError("schur_in_p: |lambda| > W");
    PowerSumPoly s(W);
    for (const auto& mu : partitions_of(n))
        s.add(mu, Rational(mn_character(lambda, mu), partition_zmu(mu)));
    return s;
}

std::vector<Rational> content_product(const Partition& lambda, int hbar_order)
{
    std::vector<Rational> acc(static_cast<std::size_t>(hbar_order) + 1);
    acc[0] = 1;
    for (int c : partition_contents(lambda)) {
        if (c == 0) continue;
        // multiply by 1/(1 - hbar c) = sum_j c^j hbar^j
        std::vector<Rational> next(acc.size());
        Rational pw(1);
        for (int j = 0; j <= hbar_order; ++j) {
            for (int i = 0; i + j <= hbar_order; ++i) next[static_cast<std::size_t>(i + j)] += acc[static_cast<std::size_t>(i)] * pw;
            pw *= c;
        }
        acc = std::move(next);
    }
    return acc;
}

Rational schur_at_delta_q(const Partition& lambda, int q)
{
    int n = partition_size(lambda);
    if (q < 1) throw Error("schur_at_delta_q: q >= 1 required");
    if (n % q != 0) return 0;
    int k = n / q;
    Partition cls(static_cast<std::size_t>(k), q);
    Integer den = factorial(k);
    for (int i = 0; i < k; ++i) den *= q;
    return Rational(Integer(mn_character(lambda, cls)), den);
}

PartitionFunction::PartitionFunction(int q, int weight_cut, int hbar_cut)
    : q_(q), weight_cut_(weight_cut), hbar_cut_(hbar_cut)
{
    if (q < 1 || weight_cut < 0 || hbar_cut < 0) throw Error("PartitionFunction: bad arguments");
    levels_.resize(static_cast<std::size_t>(weight_cut) + 1);
    for (int n = 0; n <= weight_cut; ++n) levels_[static_cast<std::size_t>(n)] = std::make_unique<PartitionIndex>(n);

    z_.resize(static_cast<std::size_t>(weight_cut) + 1);
    for (int n = 0; n <= weight_cut; ++n)
        z_[static_cast<std::size_t>(n)].assign(levels_[static_cast<std::size_t>(n)]->size(),
                                               std::vector<Rational>(static_cast<std::size_t>(hbar_cut) + 1));
    // Z = sum_lambda s_lambda(delta_q) prod_box (1 - hbar cr)^{-1} s_lambda(p);
    // only q | |lambda| contributes.
    z_[0][0][0] = 1;
    for (int n = q; n <= weight_cut; n += q) {
        const auto& idx = *levels_[static_cast<std::size_t>(n)];
        for (std::size_t L = 0; L < idx.size(); ++L) {
            const Partition& lam = idx.list()[L];
            Rational sdelta = schur_at_delta_q(lam, q_);
            if (sdelta == 0) continue;
            auto cp = content_product(lam, hbar_cut_);
            for (std::size_t M = 0; M < idx.size(); ++M) {
                std::int64_t chi = mn_character(lam, idx.list()[M]);
                if (chi == 0) continue;
                Rational base = sdelta * Rational(Integer(chi), partition_zmu(idx.list()[M]));
                auto& row = z_[static_cast<std::size_t>(n)][M];
                for (int j = 0; j <= hbar_cut_; ++j)
                    if (cp[static_cast<std::size_t>(j)] != 0) row[static_cast<std::size_t>(j)] += base * cp[static_cast<std::size_t>(j)];
            }
        }
    }

    // F = log Z by weight grading: w F_w = w Z_w - sum_{u=1}^{w-1} u F_u Z_{w-u}.
    f_ = z_; // copies shapes; overwritten below
    for (int n = 0; n <= weight_cut; ++n)
        for (auto& row : f_[static_cast<std::size_t>(n)]) std::fill(row.begin(), row.end(), Rational(0));
    for (int w = 1; w <= weight_cut; ++w) {
        const auto& idxw = *levels_[static_cast<std::size_t>(w)];
        // start from w * Z_w
        std::vector<std::vector<Rational>> acc(idxw.size(),
                                               std::vector<Rational>(static_cast<std::size_t>(hbar_cut) + 1));
        for (std::size_t M = 0; M < idxw.size(); ++M)
            for (int j = 0; j <= hbar_cut_; ++j)
                acc[M][static_cast<std::size_t>(j)] = Rational(w) * z_[static_cast<std::size_t>(w)][M][static_cast<std::size_t>(j)];
        for (int u = 1; u < w; ++u) {
            int v = w - u;
            const auto& idxu = *levels_[static_cast<std::size_t>(u)];
            const auto& idxv = *levels_[static_cast<std::size_t>(v)];
            for (std::size_t A = 0; A < idxu.size(); ++A) {
                bool any_a = false;
                for (auto& c : f_[static_cast<std::size_t>(u)][A])
                    if (c != 0) {
                        any_a = true;
                        break;
                    }
                if (!any_a) continue;
                for (std::size_t B = 0; B < idxv.size(); ++B) {
                    bool any_b = false;
                    for (auto& c : z_[static_cast<std::size_t>(v)][B])
                        if (c != 0) {
                            any_b = true;
                            break;
                        }
                    if (!any_b) continue;
                    Partition m = idxu.list()[A];
                    const Partition& m2 = idxv.list()[B];
                    m.insert(m.end(), m2.begin(), m2.end());
                    std::sort(m.begin(), m.end(), std::greater<int>());
                    auto& out = acc[idxw.index(m)];
                    for (int j1 = 0; j1 <= hbar_cut_; ++j1) {
                        const Rational& fu = f_[static_cast<std::size_t>(u)][A][static_cast<std::size_t>(j1)];
                        if (fu == 0) continue;
                        Rational ufu = Rational(u) * fu;
                        for (int j2 = 0; j1 + j2 <= hbar_cut_; ++j2) {
                            const Rational& zv = z_[static_cast<std::size_t>(v)][B][static_cast<std::size_t>(j2)];
                            if (zv == 0) continue;
                            out[static_cast<std::size_t>(j1 + j2)] -= ufu * zv;
                        }
                    }
                }
            }
        }
        for (std::size_t M = 0; M < idxw.size(); ++M)
            for (int j = 0; j <= hbar_cut_; ++j)
                f_[static_cast<std::size_t>(w)][M][static_cast<std::size_t>(j)] =
                    acc[M][static_cast<std::size_t>(j)] / w;
    }
}

Rational PartitionFunction::coeff(const std::vector<std::vector<std::vector<Rational>>>& tab,
                                  const Partition& mu, int hbar_pow) const
{
    int n = partition_size(mu);
    if (n > weight_cut_) throw CutoffError("partition function: |mu| beyond weight cutoff");
    if (hbar_pow > hbar_cut_) throw CutoffError("partition function: hbar power beyond cutoff");
    if (hbar_pow < 0) return 0;
    return tab[static_cast<std::size_t>(n)][levels_[static_cast<std::size_t>(n)]->index(mu)]
              [static_cast<std::size_t>(hbar_pow)];
}

Rational PartitionFunction::z_coeff(const Partition& mu, int hbar_pow) const { return coeff(z_, mu, hbar_pow); }
Rational PartitionFunction::f_coeff(const Partition& mu, int hbar_pow) const { return coeff(f_, mu, hbar_pow); }

Rational PartitionFunction::extract(const std::vector<std::vector<std::vector<Rational>>>& tab, long g,
                                    const Partition& mu) const
{
    int d = partition_size(mu);
    if (d % q_ != 0) return 0;
    long m = 2 * g - 2 + partition_length(mu) + d / q_;
    if (m < 0) return 0;
    if (m > hbar_cut_) throw CutoffError("partition function: m beyond hbar cutoff");
    return Rational(partition_aut(mu)) * coeff(tab, mu, static_cast<int>(m));
}

Rational PartitionFunction::disconnected(long g, const Partition& mu) const { return extract(z_, g, mu); }
Rational PartitionFunction::connected(long g, const Partition& mu) const { return extract(f_, g, mu); }

} // namespace mtr
