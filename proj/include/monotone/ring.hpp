#pragma once

#include "monotone/rational.hpp"

namespace mtr {

// Minimal coefficient-domain traits used by the generic polynomial and
// series templates.  A domain is a commutative ring with exact equality;
// `one_like` takes a witness value so runtime-parameterized rings (the
// modulus ring, sparse polynomials) can size their identity correctly.
template <class T>
struct ring_traits {
    static T zero() { return T{}; }
    static T one_like(const T&) { return T(1); }
    static bool is_zero(const T& x) { return x == T{}; }
    // Multiplicative inverse; domains that are not fields specialize and
    // throw ZeroDivisorError on non-units.
    static T inverse(const T& x)
    {
        if (x == T{}) throw ZeroDivisorError("inverse of zero");
        return T(1) / x;
    }
};

template <class T>
bool is_zero(const T& x)
{
    return ring_traits<T>::is_zero(x);
}

// n * x through doubling, so coefficient domains never need an int
// conversion of their own.
template <class T>
T scale_int(const T& x, long n)
{
    if (n == 0 || ring_traits<T>::is_zero(x)) return ring_traits<T>::zero();
    bool neg = n < 0;
    unsigned long m = neg ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    T acc = ring_traits<T>::zero();
    T pw = x;
    while (m > 0) {
        if (m & 1u) acc = acc + pw;
        m >>= 1u;
        if (m) pw = pw + pw;
    }
    if (neg) acc = ring_traits<T>::zero() - acc;
    return acc;
}

} // namespace mtr
