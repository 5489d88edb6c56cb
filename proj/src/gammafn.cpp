#include "hadex/gammafn.hpp"

#include <array>

namespace hadex {

namespace {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
constexpr std::array<double, 9> lanczos_g7 = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7,
};

std::complex<double> gamma_lanczos(std::complex<double> z) {
    // valid for Re(z) > 0.5
    z -= 1.0;
    std::complex<double> x = lanczos_g7[0];
    for (int i = 1; i < 9; ++i) x += lanczos_g7[i] / (z + double(i));
    std::complex<double> t = z + 7.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

} // namespace

std::complex<double> sinpi(std::complex<double> z) {
    // reduce the real part modulo 2 so large arguments stay accurate
    double r = z.real();
    double n = std::round(r);
    double frac = r - n;
    std::complex<double> w(frac, z.imag());
    std::complex<double> s = std::sin(M_PI * w);
    if (std::fmod(std::abs(n), 2.0) == 1.0) s = -s;
    return s;
}

std::complex<double> rgamma(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real())) {
        return 0.0;
    }
    if (z.real() < 0.5) {
        // 1/Gamma(z) = sin(pi z)/pi * Gamma(1-z)
        return sinpi(z) / M_PI * gamma_lanczos(1.0 - z);
    }
    return 1.0 / gamma_lanczos(z);
}

std::complex<double> gamma_fn(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real())) {
        throw std::domain_error("gamma_fn: pole at non-positive integer");
    }
    if (z.real() < 0.5) {
        return M_PI / (sinpi(z) * gamma_lanczos(1.0 - z));
    }
    return gamma_lanczos(z);
}

half_integer_gamma gamma_half_integer(int twice_z) {
    if (twice_z <= 0 && twice_z % 2 == 0) {
        throw std::domain_error("gamma_half_integer: pole at non-positive integer");
    }
    half_integer_gamma out;
    if (twice_z % 2 == 0) {
        out.coeff = rational(factorial(twice_z / 2 - 1));
        return out;
    }
    out.has_sqrt_pi = true;
    if (twice_z >= 1) {
        // Gamma(k + 1/2) = (2k)!/(4^k k!) sqrt(pi), k = (twice_z-1)/2
        int k = (twice_z - 1) / 2;
        out.coeff = rational(factorial(2 * k)) / (pow4(k) * rational(factorial(k)));
    } else {
        // Gamma(1/2 - k) = (-4)^k k!/(2k)! sqrt(pi), k = (1-twice_z)/2
        int k = (1 - twice_z) / 2;
        rational c = pow4(k) * rational(factorial(k)) / rational(factorial(2 * k));
        out.coeff = (k % 2 == 0) ? c : -c;
    }
    return out;
}

} // namespace hadex
