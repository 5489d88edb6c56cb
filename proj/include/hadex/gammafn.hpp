#pragma once

#include "hadex/rational.hpp"
#include "hadex/real.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace hadex {

// sin(pi z) with exact zeros at integer z (the naive sin(pi*z) misses them,
// which matters because reciprocal-gamma zeros must be exact).
std::complex<double> sinpi(std::complex<double> z);

// Entire reciprocal gamma function 1/Gamma(z). Lanczos approximation plus
// reflection; |error| ~ 1e-14 relative on the tested range, exact zeros at
// non-positive integers.
std::complex<double> rgamma(std::complex<double> z);

// Gamma(z) away from poles.
std::complex<double> gamma_fn(std::complex<double> z);

// Gamma(n/2) for 2z = n integer, n > 0, as exact rational times an optional
// factor sqrt(pi): Gamma(k) = (k-1)!, Gamma(k+1/2) = (2k)!/(4^k k!) sqrt(pi).
struct half_integer_gamma {
    rational coeff;
    bool has_sqrt_pi = false;
};

half_integer_gamma gamma_half_integer(int twice_z);

// Numeric value of Gamma at n/2 in the requested real type, built from the
// exact half-integer form. Throws for poles (n <= 0 even).
template <typename Real>
Real gamma_half_value(int twice_z) {
    using std::sqrt;
    half_integer_gamma g = gamma_half_integer(twice_z);
    Real v = static_cast<Real>(g.coeff);
    if (g.has_sqrt_pi) v *= sqrt(pi_v<Real>());
    return v;
}

// 1/Gamma(n/2) with exact zeros at poles of Gamma.
template <typename Real>
Real rgamma_half_value(int twice_z) {
    if (twice_z <= 0 && twice_z % 2 == 0) return Real(0);
    return Real(1) / gamma_half_value<Real>(twice_z);
}

} // namespace hadex
