#include "doctest.h"

#include <random>

#include "monotone/modring.hpp"
#include "monotone/polynomial.hpp"
#include "monotone/rational.hpp"
#include "monotone/series.hpp"

using namespace mtr;

namespace {

RingElem ring_pow(const RingElem& e, int k, int q)
{
    RingElem acc = RingElem::constant(q, 1);
    for (int i = 0; i < k; ++i) acc = acc * e;
    return acc;
}

TruncatedSeries<Rational> rand_series(std::mt19937& rng, int lo, int cut)
{
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    std::vector<Rational> c;
    for (int k = lo; k <= cut; ++k) c.emplace_back(num(rng), den(rng));
    return TruncatedSeries<Rational>(lo, cut, std::move(c));
}

} // namespace

TEST_CASE("rational text form")
{
    CHECK(rat_to_string(Rational(-3, 6)) == "-1/2");
    CHECK(rat_to_string(Rational(8, 4)) == "2");
    CHECK(rat_to_string(Rational(5, 1)) == "5");
}

TEST_CASE("rational parse round trip")
{
    CHECK(rat_parse("7/3") == Rational(7, 3));
    CHECK(rat_parse("-4/8") == Rational(-1, 2));
    CHECK(rat_parse("12") == Rational(12));
    CHECK_THROWS_AS(rat_parse("1/0"), Error);
    CHECK_THROWS_AS(rat_parse("abc"), Error);
}

TEST_CASE("ring trace basics")
{
    for (int q = 1; q <= 4; ++q) {
        CHECK(ring_trace(RingElem::constant(q, 1), q) == Rational(q));
    }
    CHECK(ring_trace(RingElem::generator(2), 2) == 0);
    CHECK(ring_trace(ring_pow(RingElem::generator(2), 2, 2), 2) == Rational(2, 3));
}

TEST_CASE("trace of powers matches closed form")
{
    // Tr(c^k) = q (q+1)^{-k/q} when q | k, else 0
    for (int q = 1; q <= 4; ++q) {
        RingElem c = RingElem::generator(q);
        for (int k = 0; k <= 4 * q; ++k) {
            Rational expect = 0;
            if (k % q == 0) expect = Rational(q) / rat_pow(Rational(q + 1), k / q);
            CHECK(ring_trace(ring_pow(c, k, q), q) == expect);
        }
    }
}

TEST_CASE("trace is linear")
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int q : {1, 2, 3}) {
        for (int iter = 0; iter < 50; ++iter) {
            std::vector<Rational> va, vb;
            for (int j = 0; j < q; ++j) {
                va.emplace_back(num(rng), den(rng));
                vb.emplace_back(num(rng), den(rng));
            }
            RingElem a(q, va), b(q, vb);
            CHECK(ring_trace(a + b, q) == ring_trace(a, q) + ring_trace(b, q));
        }
    }
}

TEST_CASE("ring inversion")
{
    // q=2: c * 3c = 3c^2 = 1 in Q[c]/(3c^2-1)
    RingElem c2 = RingElem::generator(2);
    CHECK(ring_invert(c2, 2) == c2 + c2 + c2);
    // q=1: the ring is Q with c = 1/2
    RingElem c1 = RingElem::generator(1);
    CHECK(ring_invert(c1, 1) == RingElem::constant(1, 2));
    CHECK_THROWS_AS(ring_invert(RingElem{}, 3), ZeroDivisorError);
}

TEST_CASE("random inverses multiply to one")
{
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int q : {1, 2, 3}) {
        RingElem one = RingElem::constant(q, 1);
        int done = 0;
        while (done < 100) {
            std::vector<Rational> v;
            for (int j = 0; j < q; ++j) v.emplace_back(num(rng), den(rng));
            RingElem e(q, v);
            if (e.is_zero()) continue;
            RingElem inv;
            try {
                inv = ring_invert(e, q);
            } catch (const ZeroDivisorError&) {
                continue;
            }
            CHECK(e * inv == one);
            ++done;
        }
    }
}

TEST_CASE("series composition: geometric outer")
{
    // outer = 1/(1-u) through u^5, inner = t + t^2 -> Fibonacci numbers
    TruncatedSeries<Rational> outer(0, 5, {1, 1, 1, 1, 1, 1});
    TruncatedSeries<Rational> inner(0, 6, {0, 1, 1, 0, 0, 0, 0});
    auto r = series_compose(outer, inner);
    CHECK(r.cut() >= 5);
    CHECK(r.coeff(0) == 1);
    CHECK(r.coeff(1) == 1);
    CHECK(r.coeff(2) == 2);
    CHECK(r.coeff(3) == 3);
    CHECK(r.coeff(4) == 5);
    CHECK(r.coeff(5) == 8);
}

TEST_CASE("series composition: corner cases")
{
    TruncatedSeries<Rational> outer(0, 4, {3, 1, 2, 0, 7});
    auto z = TruncatedSeries<Rational>::zero(9);
    auto r = series_compose(outer, z);
    CHECK(r.coeff(0) == 3); // constant term of outer
    for (int k = 1; k <= r.cut(); ++k) CHECK(r.coeff(k) == 0);

    // identity outer returns inner
    TruncatedSeries<Rational> ident(0, 8, {0, 1, 0, 0, 0, 0, 0, 0, 0});
    TruncatedSeries<Rational> inner(0, 8, {0, 2, -1, 5, 0, 1, 0, 0, 3});
    CHECK(series_compose(ident, inner) == inner);

    // inner with a constant term is rejected
    TruncatedSeries<Rational> bad(0, 3, {1, 1, 0, 0});
    CHECK_THROWS_AS(series_compose(outer, bad), ValuationError);
}

TEST_CASE("lagrange inversion of the monotone curves")
{
    // q=1: z - z^2 inverts to the Catalan series
    {
        std::vector<Rational> x(21);
        x[1] = 1;
        x[2] = -1;
        TruncatedSeries<Rational> xz(0, 20, std::move(x));
        auto z = lagrange_invert(xz, 20);
        CHECK(z.coeff(1) == 1);
        CHECK(z.coeff(2) == 1);
        CHECK(z.coeff(3) == 2);
        CHECK(z.coeff(4) == 5);
        CHECK(z.coeff(5) == 14);
    }
    // q=2: z - z^3
    {
        std::vector<Rational> x(21);
        x[1] = 1;
        x[3] = -1;
        TruncatedSeries<Rational> xz(0, 20, std::move(x));
        auto z = lagrange_invert(xz, 20);
        CHECK(z.coeff(1) == 1);
        CHECK(z.coeff(2) == 0);
        CHECK(z.coeff(3) == 1);
        CHECK(z.coeff(5) == 3);
        CHECK(z.coeff(7) == 12);
    }
    // identity
    {
        TruncatedSeries<Rational> xz(0, 10, {0, 1});
        auto z = lagrange_invert(xz, 10);
        TruncatedSeries<Rational> ident(0, 10, {0, 1});
        CHECK(z == ident);
    }
    CHECK_THROWS_AS(lagrange_invert(TruncatedSeries<Rational>(0, 5, {0, 0, 1}), 5), ValuationError);
}

TEST_CASE("lagrange round trips for q <= 4")
{
    for (int q = 1; q <= 4; ++q) {
        std::vector<Rational> x(21);
        x[1] = 1;
        x[static_cast<std::size_t>(q) + 1] = -1;
        TruncatedSeries<Rational> xz(0, 20, std::move(x));
        auto z = lagrange_invert(xz, 20);
        auto back = series_compose(xz, z);
        TruncatedSeries<Rational> ident(0, back.cut(), {});
        for (int k = 0; k <= back.cut(); ++k) CHECK(back.coeff(k) == (k == 1 ? 1 : 0));
        auto other = series_compose(z, xz.truncated(20));
        for (int k = 0; k <= other.cut(); ++k) CHECK(other.coeff(k) == (k == 1 ? 1 : 0));
    }
}

TEST_CASE("series ring laws on random triples")
{
    std::mt19937 rng(424242);
    for (int iter = 0; iter < 30; ++iter) {
        auto a = rand_series(rng, -2, 8);
        auto b = rand_series(rng, 0, 8);
        auto c = rand_series(rng, -1, 8);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("series inverse")
{
    std::mt19937 rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        auto a = rand_series(rng, -1, 9);
        if (a.valuation() > a.cut()) continue;
        auto inv = a.inverse();
        auto prod = a * inv;
        for (int k = prod.lo(); k <= prod.cut(); ++k) CHECK(prod.coeff(k) == (k == 0 ? 1 : 0));
    }
}

TEST_CASE("polynomial gcd and rational functions")
{
    using P = Polynomial<Rational>;
    P a({-1, 0, 1});     // z^2 - 1
    P b({1, 1});         // z + 1
    CHECK(poly_gcd(a, b) == b);
    auto [g, s, t] = poly_xgcd(a, P({-2, 2})); // gcd(z^2-1, 2z-2) = z-1
    CHECK(g == P({-1, 1}));
    CHECK(s * a + t * P({-2, 2}) == g);

    RationalFunction<Rational> f(P({0, 2}), P({0, 0, 4})); // 2z / 4z^2 = (1/2)/z
    CHECK(f.num() == P({Rational(1, 2)}));
    CHECK(f.den() == P({0, 1}));
}

TEST_CASE("modulus ring serial form helpers")
{
    RingElem e(3, {Rational(1, 2), Rational(-2), Rational(0)});
    CHECK(e.coeff(0) == Rational(1, 2));
    CHECK(e.coeff(1) == -2);
    CHECK(e.coeff(2) == 0);
    // reduction of c^3 in q=3: c^3 = 1/4
    RingElem c = RingElem::generator(3);
    CHECK(ring_pow(c, 3, 3) == RingElem::constant(3, Rational(1, 4)));
}
