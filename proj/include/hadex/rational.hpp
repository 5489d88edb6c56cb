#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace hadex {

// Exact arbitrary-precision rationals. Canonical reduced form with positive
// denominator is maintained by the backend.
using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

inline bigint factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    bigint r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// 4^n for possibly negative n.
inline rational pow4(int n) {
    bigint p = boost::multiprecision::pow(bigint(4), static_cast<unsigned>(n < 0 ? -n : n));
    return n < 0 ? rational(1, p) : rational(p);
}

inline rational pow_int(const rational& base, int n) {
    if (n == 0) return rational(1);
    if (n < 0) {
        if (base == 0) throw std::domain_error("pow_int: zero to negative power");
        return 1 / pow_int(base, -n);
    }
    rational r = 1, b = base;
    int e = n;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Generalized binomial coefficient with rational upper argument and integer
// lower argument. Zero for negative beta; otherwise the product form
// alpha(alpha-1)...(alpha-beta+1)/beta!, which is the continuous extension
// in alpha (a polynomial), so negative-integer alpha needs no special case.
inline rational gbinom(const rational& alpha, std::int64_t beta) {
    if (beta < 0) return rational(0);
    rational num = 1;
    for (std::int64_t i = 0; i < beta; ++i) num *= alpha - i;
    return num / rational(factorial(static_cast<int>(beta)));
}

inline int parity_sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace hadex
