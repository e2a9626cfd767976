#pragma once

#include <cstddef>
#include <vector>

#include "monotone/polynomial.hpp"
#include "monotone/rational.hpp"
#include "monotone/ring.hpp"

namespace mtr {

// Element of Q[c]/((q+1)c^q - 1).  The roots of the modulus are exactly the
// critical points of x(z) = z(1-z^q); summing an expression over all critical
// points is the trace of this ring, so per-critical-point values never need
// to be materialized as algebraic numbers.
//
// Representation: empty vector means 0 in any ring; otherwise exactly q
// coefficients a_0 + a_1 c + ... + a_{q-1} c^{q-1}.
class RingElem {
public:
    RingElem() = default;
    RingElem(int q, std::vector<Rational> coeffs) : a_(std::move(coeffs))
    {
        reduce_from_raw(q);
    }
    static RingElem constant(int q, const Rational& r)
    {
        if (r == 0) return {};
        std::vector<Rational> v(static_cast<std::size_t>(q));
        v[0] = r;
        return make_reduced(std::move(v));
    }
    static RingElem generator(int q)
    {
        std::vector<Rational> v(static_cast<std::size_t>(q));
        if (q == 1)
            v[0] = Rational(1, 2); // c = 1/2 in Q[c]/(2c-1)
        else
            v[1] = 1;
        return make_reduced(std::move(v));
    }

    bool is_zero() const { return a_.empty(); }
    int q() const { return static_cast<int>(a_.size()); } // 0 for the zero element
    const std::vector<Rational>& coeffs() const { return a_; }
    Rational coeff(std::size_t j) const { return j < a_.size() ? a_[j] : Rational(0); }

    friend RingElem operator+(const RingElem& x, const RingElem& y)
    {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        check_compat(x, y);
        std::vector<Rational> v = x.a_;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += y.a_[i];
        return make_reduced(std::move(v));
    }
    friend RingElem operator-(const RingElem& x, const RingElem& y) { return x + (-y); }
    RingElem operator-() const
    {
        RingElem r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }
    friend RingElem operator*(const RingElem& x, const RingElem& y)
    {
        if (x.is_zero() || y.is_zero()) return {};
        check_compat(x, y);
        int q = x.q();
        // c^q = 1/(q+1), so degree-overflow folds back with a 1/(q+1) factor.
        std::vector<Rational> prod(2 * static_cast<std::size_t>(q));
        for (std::size_t i = 0; i < x.a_.size(); ++i) {
            if (x.a_[i] == 0) continue;
            for (std::size_t j = 0; j < y.a_.size(); ++j) prod[i + j] += x.a_[i] * y.a_[j];
        }
        Rational fold(1, q + 1);
        std::vector<Rational> v(static_cast<std::size_t>(q));
        for (std::size_t k = 0; k < prod.size(); ++k) {
            if (k < static_cast<std::size_t>(q))
                v[k] += prod[k];
            else
                v[k - static_cast<std::size_t>(q)] += prod[k] * fold;
        }
        return make_reduced(std::move(v));
    }
    RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
    RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

    bool operator==(const RingElem& o) const
    {
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        check_compat(*this, o);
        return a_ == o.a_;
    }

    // Modulus polynomial (q+1)u^q - 1.
    static Polynomial<Rational> modulus(int q)
    {
        std::vector<Rational> m(static_cast<std::size_t>(q) + 1);
        m[0] = -1;
        m[static_cast<std::size_t>(q)] = q + 1;
        return Polynomial<Rational>(std::move(m));
    }

private:
    static void check_compat(const RingElem& x, const RingElem& y)
    {
        if (x.q() != y.q()) throw Error("RingElem: mixed moduli");
    }
    static RingElem make_reduced(std::vector<Rational> v)
    {
        RingElem r;
        bool zero = true;
        for (const auto& x : v)
            if (x != 0) {
                zero = false;
                break;
            }
        if (!zero) r.a_ = std::move(v);
        return r;
    }
    void reduce_from_raw(int q)
    {
        std::vector<Rational> raw = std::move(a_);
        std::vector<Rational> v(static_cast<std::size_t>(q));
        Rational fold(1, q + 1);
        for (std::size_t k = 0; k < raw.size(); ++k) {
            Rational scale(1);
            std::size_t idx = k;
            while (idx >= static_cast<std::size_t>(q)) {
                idx -= static_cast<std::size_t>(q);
                scale *= fold;
            }
            v[idx] += raw[k] * scale;
        }
        *this = make_reduced(std::move(v));
    }

    std::vector<Rational> a_;
};

// Power sums Tr(c^k), k = 0..kmax, of the modulus via Newton's identities on
// the monic form u^q - 1/(q+1).
inline std::vector<Rational> ring_power_sums(int q, int kmax)
{
    std::vector<Rational> monic(static_cast<std::size_t>(q) + 1); // u^q + m_{q-1}u^{q-1} + ... + m_0
    monic[0] = Rational(-1, q + 1);
    monic[static_cast<std::size_t>(q)] = 1;
    std::vector<Rational> p(static_cast<std::size_t>(kmax) + 1);
    p[0] = q;
    for (int k = 1; k <= kmax; ++k) {
        Rational s(0);
        for (int i = 1; i < k && i <= q; ++i)
            s += monic[static_cast<std::size_t>(q - i)] * p[static_cast<std::size_t>(k - i)];
        if (k <= q) s += Rational(k) * monic[static_cast<std::size_t>(q - k)];
        p[static_cast<std::size_t>(k)] = -s;
    }
    return p;
}

// Sum of e over all q critical points: Q[c]/P -> Q, linear in the power sums.
inline Rational ring_trace(const RingElem& e, int q)
{
    if (e.is_zero()) return 0;
    if (e.q() != q) throw Error("ring_trace: modulus mismatch");
    auto p = ring_power_sums(q, q - 1);
    Rational t(0);
    for (int j = 0; j < q; ++j) t += e.coeff(static_cast<std::size_t>(j)) * p[static_cast<std::size_t>(j)];
    return t;
}

// Multiplicative inverse via extended gcd with the modulus.  A nontrivial
// common factor means the element vanishes at some critical point.
inline RingElem ring_invert(const RingElem& e, int q)
{
    if (e.is_zero()) throw ZeroDivisorError("ring_invert: zero element");
    if (e.q() != q) throw Error("ring_invert: modulus mismatch");
    Polynomial<Rational> rep{std::vector<Rational>(e.coeffs())};
    auto [g, s, t] = poly_xgcd(rep, RingElem::modulus(q));
    (void)t;
    if (g.degree() != 0)
        throw ZeroDivisorError("ring_invert: element shares a factor with the modulus");
    // g is monic of degree 0, i.e. exactly 1, so s*rep = 1 mod P.
    std::vector<Rational> sc = s.coeffs();
    return RingElem(q, std::move(sc));
}

inline RingElem ring_inverse_int(int q, long n) // 1/n as a ring constant
{
    return RingElem::constant(q, Rational(1, n));
}

template <>
struct ring_traits<RingElem> {
    static RingElem zero() { return {}; }
    static RingElem one_like(const RingElem& w)
    {
        if (w.is_zero()) throw Error("RingElem one_like: zero witness");
        return RingElem::constant(w.q(), 1);
    }
    static bool is_zero(const RingElem& x) { return x.is_zero(); }
    static RingElem inverse(const RingElem& x)
    {
        if (x.is_zero()) throw ZeroDivisorError("RingElem inverse of zero");
        return ring_invert(x, x.q());
    }
};

} // namespace mtr
