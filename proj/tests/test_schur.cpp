#include "doctest.h"

#include "monotone/hurwitz.hpp"
#include "monotone/schur.hpp"
#include "monotone/series.hpp"

using namespace mtr;

TEST_CASE("murnaghan-nakayama characters")
{
    CHECK(mn_character({1}, {1}) == 1);
    CHECK(mn_character({2}, {2}) == 1);
    CHECK(mn_character({1, 1}, {2}) == -1);
    CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(mn_character({2, 1}, {3}) == -1);
    CHECK_THROWS_AS(mn_character({2}, {1}), SizeMismatchError);
}

TEST_CASE("schur functions in the power-sum basis")
{
    PowerSumPoly s1 = schur_in_p({1}, 5);
    CHECK(s1.terms.size() == 1);
    CHECK(s1.terms.at({1}) == 1);

    PowerSumPoly s2 = schur_in_p({2}, 5);
    CHECK(s2.terms.at({1, 1}) == Rational(1, 2));
    CHECK(s2.terms.at({2}) == Rational(1, 2));

    PowerSumPoly s11 = schur_in_p({1, 1}, 5);
    CHECK(s11.terms.at({1, 1}) == Rational(1, 2));
    CHECK(s11.terms.at({2}) == Rational(-1, 2));
}

TEST_CASE("character orthogonality up to n = 5")
{
    for (int n = 1; n <= 5; ++n) {
        auto mus = partitions_of(n);
        for (const auto& mu : mus)
            for (const auto& nu : mus) {
                Integer s = 0;
                for (const auto& lam : mus) s += Integer(mn_character(lam, mu)) * mn_character(lam, nu);
                CHECK(s == (mu == nu ? partition_zmu(mu) : Integer(0)));
            }
    }
}

TEST_CASE("transpose flips the sign character")
{
    // substituting p_k -> (-1)^{k-1} p_k maps s_lambda to s_{lambda^t}
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lam : partitions_of(n)) {
            Partition lt = partition_conjugate(lam);
            for (const auto& mu : partitions_of(n)) {
                int sign = (partition_size(mu) - partition_length(mu)) % 2 ? -1 : 1;
                CHECK(mn_character(lt, mu) == sign * mn_character(lam, mu));
            }
        }
    }
}

TEST_CASE("content products")
{
    auto c1 = content_product({1}, 4);
    CHECK(c1[0] == 1);
    CHECK(c1[1] == 0);

    auto c2 = content_product({2}, 4);
    for (int j = 0; j <= 4; ++j) CHECK(c2[static_cast<std::size_t>(j)] == 1);

    auto c21 = content_product({2, 1}, 4); // contents {0, 1, -1}
    CHECK(c21[0] == 1);
    CHECK(c21[1] == 0);
    CHECK(c21[2] == 1);
    CHECK(c21[3] == 0);
    CHECK(c21[4] == 1);
}

TEST_CASE("schur at the delta point")
{
    CHECK(schur_at_delta_q({1}, 1) == 1);
    CHECK(schur_at_delta_q({3}, 1) == Rational(1, 6));
    CHECK(schur_at_delta_q({2, 1}, 3) == Rational(-1, 3));
    CHECK(schur_at_delta_q({1}, 2) == 0);
}

TEST_CASE("partition function truncation basics")
{
    PartitionFunction z1(1, 2, 3);
    CHECK(z1.z_coeff({}, 0) == 1);
    CHECK(z1.z_coeff({1}, 0) == 1);

    PartitionFunction z2(2, 2, 3);
    CHECK(z2.z_coeff({}, 0) == 1);
    for (int j = 0; j <= 3; ++j) CHECK(z2.z_coeff({1}, j) == 0);

    CHECK_THROWS_AS(z1.z_coeff({1, 1, 1}, 0), CutoffError);
    CHECK_THROWS_AS(z1.z_coeff({1}, 9), CutoffError);
}

TEST_CASE("extraction examples")
{
    PartitionFunction zq1(1, 4, 6);
    CHECK(zq1.disconnected(0, {1}) == 1);
    CHECK(zq1.disconnected(0, {1, 1, 1}) == 11);
    CHECK(zq1.connected(0, {2}) == Rational(1, 2));
    CHECK(zq1.connected(0, {1}) == 1);
    CHECK(zq1.connected(0, {1, 1, 1}) == 8);

    PartitionFunction zq2(2, 2, 4);
    CHECK(zq2.disconnected(0, {1}) == 0);
}

TEST_CASE("triple-oracle agreement at small size")
{
    BruteForce bf;
    for (int q : {1, 2}) {
        PartitionFunction z(q, 4, 8);
        for (int d = 1; d <= 4; ++d) {
            for (const auto& mu : partitions_of(d)) {
                for (long g = 0; g <= 3; ++g) {
                    auto m = transposition_count(g, mu, q);
                    if (m && (*m > 8 || *m > bf.guard().max_m)) continue;
                    CHECK(z.disconnected(g, mu) == bf.count_disconnected(g, mu, q));
                    CHECK(z.connected(g, mu) == bf.count_connected(g, mu, q));
                }
            }
        }
    }
}

TEST_CASE("genus-0 one-part identity against lagrange inversion")
{
    // sum_mu mu h_{0,(mu)} x^mu equals the expansion of z^q under x = z(1-z^q)
    for (int q : {1, 2, 3}) {
        int W = 6;
        PartitionFunction z(q, W, 8);
        std::vector<Rational> xc(static_cast<std::size_t>(W) + 1);
        xc[1] = 1;
        if (q + 1 <= W) xc[static_cast<std::size_t>(q) + 1] = -1;
        TruncatedSeries<Rational> xz(0, W, std::move(xc));
        auto zx = lagrange_invert(xz, W);
        auto zq = TruncatedSeries<Rational>::constant(Rational(1), W);
        for (int i = 0; i < q; ++i) zq = zq * zx;
        for (int mu = 1; mu <= W; ++mu) {
            Rational lhs = Rational(mu) * z.connected(0, {mu});
            CHECK(lhs == zq.coeff(mu));
        }
    }
}
