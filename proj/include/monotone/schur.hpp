#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "monotone/partition.hpp"
#include "monotone/rational.hpp"

namespace mtr {

// Polynomial in the power sums p_1, p_2, ..., truncated at total p-weight W.
struct PowerSumPoly {
    int weight_cut = 0;
    std::map<Partition, Rational> terms; // key: index partition of the monomial p_mu

    PowerSumPoly() = default;
    explicit PowerSumPoly(int W) : weight_cut(W) {}
    void add(const Partition& mu, const Rational& c);
    friend PowerSumPoly operator+(const PowerSumPoly& a, const PowerSumPoly& b);
    friend PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b);
    bool operator==(const PowerSumPoly& o) const;
};

// Irreducible S_n character chi^lambda_mu by the Murnaghan-Nakayama rule
// (border-strip removal on beta-sets).  Values fit in int64 through n = 20.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

// s_lambda = sum_mu chi^lambda_mu p_mu / z_mu.
PowerSumPoly schur_in_p(const Partition& lambda, int W);

// hbar-coefficients of prod_{box} (1 - hbar * content)^{-1}, orders 0..hbar_order.
std::vector<Rational> content_product(const Partition& lambda, int hbar_order);

// Schur function at p_j = delta_{j,q}: chi^lambda_{(q^k)} / (q^k k!) for
// q | |lambda|, zero otherwise.
Rational schur_at_delta_q(const Partition& lambda, int q);

// Truncation of the monotone partition function Z (and its logarithm F):
// coefficient of p_mu hbar^j for |mu| <= weight_cut, j <= hbar_cut.
class PartitionFunction {
public:
    PartitionFunction(int q, int weight_cut, int hbar_cut);

    int q() const { return q_; }
    int weight_cut() const { return weight_cut_; }
    int hbar_cut() const { return hbar_cut_; }

    Rational z_coeff(const Partition& mu, int hbar_pow) const;
    Rational f_coeff(const Partition& mu, int hbar_pow) const;

    // h^bullet_{g,mu} = |Aut(mu)| [p_mu hbar^m] Z with m = 2g-2+l+|mu|/q.
    Rational disconnected(long g, const Partition& mu) const;
    // h^circ_{g,mu}, same extraction from log Z.
    Rational connected(long g, const Partition& mu) const;

    const PartitionIndex& level(int n) const { return *levels_[static_cast<std::size_t>(n)]; }

private:
    Rational coeff(const std::vector<std::vector<std::vector<Rational>>>& tab, const Partition& mu,
                   int hbar_pow) const;
    Rational extract(const std::vector<std::vector<std::vector<Rational>>>& tab, long g,
                     const Partition& mu) const;

    int q_, weight_cut_, hbar_cut_;
    std::vector<std::unique_ptr<PartitionIndex>> levels_;
    // tables indexed [n][mu_idx][hbar_pow]
    std::vector<std::vector<std::vector<Rational>>> z_, f_;
};

} // namespace mtr
