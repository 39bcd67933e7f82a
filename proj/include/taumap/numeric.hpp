#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace taumap {

// Exact arbitrary-precision integers and rationals; all enumerative results
// are computed in these types and only converted to floating point at the
// reporting boundary.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// High-precision decimals (50 significant digits) for the few places where
// transcendental quantities enter: e^d, sqrt, pi.
using Real = boost::multiprecision::mpfr_float_50;

inline Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int b = 1;
    for (long i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

inline Int int_pow(Int base, unsigned long e) {
    Int acc = 1;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0)
        return Rat(int_pow(numerator(base), static_cast<unsigned long>(e)),
                   int_pow(denominator(base), static_cast<unsigned long>(e)));
    if (base == 0) throw std::domain_error("rat_pow: zero to a negative power");
    return Rat(int_pow(denominator(base), static_cast<unsigned long>(-e)),
               int_pow(numerator(base), static_cast<unsigned long>(-e)));
}

// Parses "num", "num/den", with optional leading '-'.
inline Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("parse_rational: zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::domain_error("parse_rational: malformed rational '" + s + "'");
    }
}

// Canonical "num/den" form; integers print without the "/1".
inline std::string rational_string(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

inline Real to_real(const Rat& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

}  // namespace taumap
