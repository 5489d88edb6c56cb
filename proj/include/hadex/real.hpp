#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <ostream>

namespace hadex {

// Wide float used inside the extraction pipeline. The coefficient extraction
// has to resolve contributions ~1e-21 relative to the sampled values, which
// is out of reach for double, so the sampling/contour/fit chain runs on this
// type and results are narrowed at the API boundary.
using quad = boost::multiprecision::cpp_bin_float_quad;

template <typename Real>
Real pi_v() {
    return boost::math::constants::pi<Real>();
}

// Minimal complex type that works for both double and multiprecision reals
// (std::complex is only specified for the builtin floating types).
template <typename Real>
struct cplx {
    Real re{}, im{};

    cplx() = default;
    cplx(Real r) : re(r) {}
    cplx(Real r, Real i) : re(r), im(i) {}

    friend cplx operator+(const cplx& a, const cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend cplx operator-(const cplx& a, const cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend cplx operator-(const cplx& a) { return {-a.re, -a.im}; }
    friend cplx operator*(const cplx& a, const cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend cplx operator*(const Real& s, const cplx& a) { return {s * a.re, s * a.im}; }
    friend cplx operator*(const cplx& a, const Real& s) { return {a.re * s, a.im * s}; }
    friend cplx operator/(const cplx& a, const Real& s) { return {a.re / s, a.im / s}; }
    friend cplx operator/(const cplx& a, const cplx& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    cplx& operator+=(const cplx& b) { re += b.re; im += b.im; return *this; }
    cplx& operator-=(const cplx& b) { re -= b.re; im -= b.im; return *this; }
    cplx& operator*=(const cplx& b) { *this = *this * b; return *this; }

    friend bool operator==(const cplx& a, const cplx& b) { return a.re == b.re && a.im == b.im; }

    friend std::ostream& operator<<(std::ostream& os, const cplx& a) {
        return os << "(" << a.re << "," << a.im << ")";
    }
};

template <typename Real>
Real abs(const cplx<Real>& z) {
    using std::sqrt;
    return sqrt(z.re * z.re + z.im * z.im);
}

template <typename Real>
cplx<Real> cis(const Real& t) {
    using std::cos;
    using std::sin;
    return {cos(t), sin(t)};
}

// z^n for integer n by binary exponentiation.
template <typename Real>
cplx<Real> ipow(cplx<Real> z, int n) {
    if (n < 0) return cplx<Real>(Real(1)) / ipow(z, -n);
    cplx<Real> r(Real(1));
    while (n > 0) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

template <typename Real>
Real ipow(Real z, int n) {
    if (n < 0) return Real(1) / ipow(z, -n);
    Real r(1);
    while (n > 0) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

} // namespace hadex
