#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "monotone/errors.hpp"

namespace mtr {

// The universal exact scalar.  The rational adaptor keeps values canonical
// (lowest terms, positive denominator) after every operation, which is
// exactly the equality semantics the test suite relies on.  Expression
// templates are off so the types compose with generic templates.
using Integer =
    boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

// Canonical text form: "n" for integers, "n/d" otherwise, d > 0.
inline std::string rat_to_string(const Rational& r)
{
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "n" and "n/d".
inline Rational rat_parse(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw Error("rational parse: zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw Error("rational parse: bad input '" + s + "'");
    }
}

inline Rational rat_pow(const Rational& base, long e)
{
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw ZeroDivisorError("rat_pow: 0^negative");
        return Rational(1) / rat_pow(base, -e);
    }
    Rational acc(1), b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline Integer factorial(long n)
{
    Integer f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Integer binomial(long n, long k)
{
    if (k < 0 || k > n) return 0;
    Integer b = 1;
    for (long i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

} // namespace mtr
