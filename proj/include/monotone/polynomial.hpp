#pragma once

#include <algorithm>
#include <vector>

#include "monotone/ring.hpp"

namespace mtr {

// Dense univariate polynomial over a coefficient domain T, low order first.
// The zero polynomial is the empty coefficient vector.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial monomial(const T& coeff, int deg)
    {
        std::vector<T> v(static_cast<std::size_t>(deg) + 1);
        v[static_cast<std::size_t>(deg)] = coeff;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(int k) const
    {
        if (k < 0 || k >= static_cast<int>(c_.size())) return ring_traits<T>::zero();
        return c_[static_cast<std::size_t>(k)];
    }

    const T& leading() const { return c_.back(); }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& x : r.c_) x = ring_traits<T>::zero() - x;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (mtr::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const T& s) const
    {
        Polynomial r = *this;
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }

    template <class Arg>
    Arg eval(const Arg& x) const
    {
        if (c_.empty()) return Arg{};
        Arg acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Arg(c_[i]);
        return acc;
    }
    T operator()(const T& x) const
    {
        T acc = ring_traits<T>::zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            T k = c_[i];
            for (std::size_t j = 1; j < i; ++j) k = k + c_[i]; // i * c_[i] without T(int)
            r[i - 1] = k;
        }
        return Polynomial(std::move(r));
    }

    bool operator==(const Polynomial& o) const
    {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(mtr::is_zero(c_[i] - o.c_[i]))) return false;
        return true;
    }

private:
    void trim()
    {
        while (!c_.empty() && mtr::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

// Division with remainder; requires the divisor's leading coefficient to be
// invertible in T.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> poly_divmod(const Polynomial<T>& a, const Polynomial<T>& b)
{
    if (b.is_zero()) throw ZeroDivisorError("polynomial division by zero");
    std::vector<T> rem(a.coeffs());
    int db = b.degree();
    T lead_inv = ring_traits<T>::inverse(b.leading());
    if (a.degree() < db) return {Polynomial<T>{}, a};
    std::vector<T> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int k = a.degree(); k >= db; --k) {
        T q = rem[static_cast<std::size_t>(k)] * lead_inv;
        if (!is_zero(q)) {
            quot[static_cast<std::size_t>(k - db)] = q;
            for (int j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(k - db + j)] =
                    rem[static_cast<std::size_t>(k - db + j)] - q * b.coeff(j);
        }
    }
    return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

// Exact division: throws if the remainder is nonzero.
template <class T>
Polynomial<T> poly_exact_div(const Polynomial<T>& a, const Polynomial<T>& b)
{
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw Error("poly_exact_div: not divisible");
    return q;
}

template <class T>
bool poly_divides(const Polynomial<T>& b, const Polynomial<T>& a)
{
    if (a.is_zero()) return true;
    if (b.is_zero() || a.degree() < b.degree()) return false;
    return poly_divmod(a, b).second.is_zero();
}

// Monic gcd over a field.
template <class T>
Polynomial<T> poly_gcd(Polynomial<T> a, Polynomial<T> b)
{
    while (!b.is_zero()) {
        auto r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(ring_traits<T>::inverse(a.leading()));
    return a;
}

// Extended gcd: returns (g, s, t) monic with s*a + t*b = g.
template <class T>
std::tuple<Polynomial<T>, Polynomial<T>, Polynomial<T>> poly_xgcd(Polynomial<T> a, Polynomial<T> b)
{
    Polynomial<T> s0 = Polynomial<T>::monomial(T(1), 0), s1{};
    Polynomial<T> t0{}, t1 = Polynomial<T>::monomial(T(1), 0);
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        auto s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        auto t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!a.is_zero()) {
        T inv = ring_traits<T>::inverse(a.leading());
        a = a.scaled(inv);
        s0 = s0.scaled(inv);
        t0 = t0.scaled(inv);
    }
    return {a, s0, t0};
}

// Reduced rational function over a field domain: denominator monic, gcd 1.
template <class T>
class RationalFunction {
public:
    RationalFunction() : num_{}, den_(Polynomial<T>::monomial(T(1), 0)) {}
    RationalFunction(Polynomial<T> num, Polynomial<T> den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) throw ZeroDivisorError("rational function: zero denominator");
        normalize();
    }

    const Polynomial<T>& num() const { return num_; }
    const Polynomial<T>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        if (b.is_zero()) throw ZeroDivisorError("rational function division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    bool operator==(const RationalFunction& o) const
    {
        return num_ == o.num_ && den_ == o.den_;
    }

private:
    void normalize()
    {
        if (num_.is_zero()) {
            den_ = Polynomial<T>::monomial(T(1), 0);
            return;
        }
        auto g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_exact_div(num_, g);
            den_ = poly_exact_div(den_, g);
        }
        T inv = ring_traits<T>::inverse(den_.leading());
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    Polynomial<T> num_, den_;
};

} // namespace mtr
