#pragma once

#include <algorithm>
#include <vector>

#include "monotone/ring.hpp"

namespace mtr {

// Univariate truncated Laurent series.  Coefficients are stored for every
// exponent in [lo, cut]; `cut` is the guaranteed-valid cutoff and every
// operation propagates it pessimistically (min-rule), so a coefficient that
// can be read is always exact.
template <class T>
class TruncatedSeries {
public:
    TruncatedSeries() : lo_(0), cut_(-1) {}
    TruncatedSeries(int lo, int cut, std::vector<T> coeffs) : lo_(lo), cut_(cut), c_(std::move(coeffs))
    {
        c_.resize(len());
    }
    static TruncatedSeries zero(int cut) { return TruncatedSeries(0, cut, {}); }
    static TruncatedSeries constant(const T& v, int cut)
    {
        TruncatedSeries s(0, cut, {});
        if (cut >= 0) s.c_[0] = v;
        return s;
    }
    static TruncatedSeries monomial(const T& coeff, int k, int cut)
    {
        TruncatedSeries s(k, cut, {});
        if (k <= cut) s.c_[0] = coeff;
        return s;
    }

    int lo() const { return lo_; }
    int cut() const { return cut_; }
    bool window_empty() const { return cut_ < lo_; }

    T coeff(int k) const
    {
        if (k > cut_)
            throw CutoffError("series coefficient beyond cutoff");
        if (k < lo_) return ring_traits<T>::zero();
        return c_[static_cast<std::size_t>(k - lo_)];
    }
    // Like coeff() but treats exponents beyond the cutoff as unknown-zero;
    // only for display/diagnostics.
    T coeff_or_zero(int k) const
    {
        if (k < lo_ || k > cut_) return ring_traits<T>::zero();
        return c_[static_cast<std::size_t>(k - lo_)];
    }
    void set_coeff(int k, const T& v)
    {
        if (k < lo_ || k > cut_) throw CutoffError("series set_coeff out of window");
        c_[static_cast<std::size_t>(k - lo_)] = v;
    }

    // First stored exponent with nonzero coefficient; cut_+1 if none.
    int valuation() const
    {
        for (int k = lo_; k <= cut_; ++k)
            if (!is_zero(c_[static_cast<std::size_t>(k - lo_)])) return k;
        return cut_ + 1;
    }
    bool known_zero() const { return valuation() > cut_; }

    TruncatedSeries truncated(int new_cut) const
    {
        if (new_cut >= cut_) return *this;
        TruncatedSeries r(lo_, new_cut, {});
        for (int k = lo_; k <= new_cut; ++k) r.c_[static_cast<std::size_t>(k - lo_)] = coeff_or_zero(k);
        return r;
    }
    // Declares a (true) higher lower bound, dropping stored zeros below it.
    TruncatedSeries with_lo(int new_lo) const
    {
        TruncatedSeries r(new_lo, cut_, {});
        for (int k = new_lo; k <= cut_; ++k) r.c_[static_cast<std::size_t>(k - new_lo)] = coeff_or_zero(k);
        return r;
    }
    TruncatedSeries shifted(int d) const // multiply by t^d
    {
        TruncatedSeries r = *this;
        r.lo_ += d;
        r.cut_ += d;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        int lo = std::min(a.lo_, b.lo_);
        int cut = std::min(a.cut_, b.cut_);
        TruncatedSeries r(lo, cut, {});
        for (int k = lo; k <= cut; ++k)
            r.c_[static_cast<std::size_t>(k - lo)] = a.coeff_or_zero(k) + b.coeff_or_zero(k);
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        return a + (-b);
    }
    TruncatedSeries operator-() const
    {
        TruncatedSeries r = *this;
        for (auto& x : r.c_) x = ring_traits<T>::zero() - x;
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        int lo = a.lo_ + b.lo_;
        int cut = std::min(a.cut_ + b.lo_, b.cut_ + a.lo_);
        TruncatedSeries r(lo, cut, {});
        for (int i = a.lo_; i <= a.cut_; ++i) {
            const T& ai = a.c_[static_cast<std::size_t>(i - a.lo_)];
            if (is_zero(ai)) continue;
            int jmax = std::min(b.cut_, cut - i);
            for (int j = b.lo_; j <= jmax; ++j) {
                const T& bj = b.c_[static_cast<std::size_t>(j - b.lo_)];
                if (is_zero(bj)) continue;
                auto& slot = r.c_[static_cast<std::size_t>(i + j - lo)];
                slot = slot + ai * bj;
            }
        }
        return r;
    }
    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    TruncatedSeries scaled(const T& s) const
    {
        TruncatedSeries r = *this;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    // d/dt.
    TruncatedSeries derivative() const
    {
        TruncatedSeries r(lo_ - 1, cut_ - 1, {});
        for (int k = lo_; k <= cut_; ++k)
            r.c_[static_cast<std::size_t>(k - 1 - r.lo_)] = scale_int(c_[static_cast<std::size_t>(k - lo_)], k);
        return r;
    }

    // Multiplicative inverse as a Laurent series; the leading coefficient
    // must be a unit of T.
    TruncatedSeries inverse() const
    {
        int v = valuation();
        if (v > cut_) throw ZeroDivisorError("series inverse: no nonzero coefficient in window");
        T lead = c_[static_cast<std::size_t>(v - lo_)];
        T lead_inv = ring_traits<T>::inverse(lead);
        int n = cut_ - v; // number of known higher coefficients of the normalized series
        // Normalized u = f / (lead * t^v) = 1 + sum_{j>=1} u_j t^j, known for j <= n.
        std::vector<T> u(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) u[static_cast<std::size_t>(j)] = c_[static_cast<std::size_t>(v + j - lo_)] * lead_inv;
        std::vector<T> w(static_cast<std::size_t>(n) + 1);
        w[0] = ring_traits<T>::one_like(lead);
        for (int m = 1; m <= n; ++m) {
            T s = ring_traits<T>::zero();
            for (int j = 1; j <= m; ++j) s = s + u[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(m - j)];
            w[static_cast<std::size_t>(m)] = ring_traits<T>::zero() - s;
        }
        TruncatedSeries r(-v, cut_ - 2 * v, {});
        for (int m = 0; m <= n; ++m) r.c_[static_cast<std::size_t>(m)] = w[static_cast<std::size_t>(m)] * lead_inv;
        return r;
    }

    bool operator==(const TruncatedSeries& o) const
    {
        int lo = std::min(lo_, o.lo_);
        int cut = std::min(cut_, o.cut_);
        for (int k = lo; k <= cut; ++k)
            if (!is_zero(coeff_or_zero(k) - o.coeff_or_zero(k))) return false;
        return true;
    }

private:
    std::size_t len() const { return cut_ >= lo_ ? static_cast<std::size_t>(cut_ - lo_ + 1) : 0; }
    int lo_, cut_;
    std::vector<T> c_;
};

// outer(inner).  inner must have valuation >= 1 unless outer is constant;
// otherwise the composition has no well-defined truncation.
template <class T>
TruncatedSeries<T> series_compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner)
{
    if (outer.lo() < 0) throw ValuationError("series_compose: Laurent outer not supported");
    int v = inner.valuation();
    if (outer.cut() > 0 && v < 1)
        throw ValuationError("series_compose: inner series has a constant term");
    if (v > inner.cut()) {
        // inner is (known) zero: result is the constant term of outer
        return TruncatedSeries<T>::constant(outer.coeff_or_zero(0), inner.cut());
    }
    int cut = std::min(inner.cut(), v * (outer.cut() + 1) - 1);
    TruncatedSeries<T> acc = TruncatedSeries<T>::zero(cut);
    TruncatedSeries<T> pw = TruncatedSeries<T>::constant(ring_traits<T>::one_like(inner.coeff(v)), cut);
    TruncatedSeries<T> in = inner.truncated(cut);
    for (int k = 0; k <= outer.cut(); ++k) {
        if (k > 0) {
            pw = (pw * in).truncated(cut);
            if (pw.lo() > cut) break;
        }
        const T a = outer.coeff_or_zero(k);
        if (!is_zero(a)) acc += pw.scaled(a);
    }
    return acc.truncated(cut);
}

// Compositional inverse of a series of valuation exactly 1 with unit leading
// coefficient: returns z(x) with x(z(x)) = x through the cutoff.
template <class T>
TruncatedSeries<T> lagrange_invert(const TruncatedSeries<T>& x_of_z, int cutoff)
{
    if (x_of_z.valuation() != 1)
        throw ValuationError("lagrange_invert: series must have valuation exactly 1");
    const T a1 = x_of_z.coeff(1);
    const T one = ring_traits<T>::one_like(a1);
    TruncatedSeries<T> ident = TruncatedSeries<T>::monomial(one, 1, cutoff);
    TruncatedSeries<T> outer = x_of_z.truncated(std::min(x_of_z.cut(), cutoff));
    TruncatedSeries<T> z = ident.scaled(ring_traits<T>::inverse(a1));
    TruncatedSeries<T> outer_d = outer.derivative();
    // Newton iteration doubles the number of correct coefficients each pass.
    for (int pass = 0; pass < 64; ++pass) {
        TruncatedSeries<T> err = series_compose(outer, z) - ident;
        if (err.known_zero()) break;
        err = err.with_lo(err.valuation()); // keeps min-rule cutoffs from decaying
        TruncatedSeries<T> corr = err * series_compose(outer_d, z).inverse();
        z = (z - corr).truncated(cutoff);
    }
    return z;
}

} // namespace mtr
