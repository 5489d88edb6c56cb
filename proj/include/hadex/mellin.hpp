#pragma once

#include "hadex/bump.hpp"
#include "hadex/gammafn.hpp"
#include "hadex/jets.hpp"
#include "hadex/quadrature.hpp"

#include <complex>
#include <optional>

namespace hadex {

// Result of a meromorphic evaluation: either a finite value or a simple-pole
// marker carrying the residue. Poles can occur at most at non-positive
// integers.
struct mero_value {
    enum class kind_t { finite, pole };
    kind_t kind = kind_t::finite;
    std::complex<double> value{};   // finite case
    std::complex<double> residue{}; // pole case
    std::complex<double> location{};

    bool is_pole() const { return kind == kind_t::pole; }
};

// binom(alpha, k) for complex alpha, integer k (product form).
std::complex<double> cbinom(std::complex<double> alpha, int k);

// M(f)(alpha) = int_0^inf f(x) x^(alpha-1) dx, Re(alpha) > 0, by quadrature
// over supp(f) cap (0, inf).
std::complex<double> mellin(const bump_function& f, std::complex<double> alpha);

// Meromorphic continuation via M(f)(alpha) = -M(f')(alpha+1)/alpha applied
// ceil(1-Re(alpha)) times. At alpha = -k the residue is (-1)^k/k! f^(k)(0);
// when that residue vanishes (parity) the finite limit is returned.
mero_value mellin_continued(const bump_function& f, std::complex<double> alpha);

// M'(f)(alpha) = M(f)(alpha)/Gamma((alpha+1)/2). For odd f the Gamma poles
// cancel the Mellin poles, leaving finite values everywhere. Throws
// std::domain_error when an uncancelled pole is hit.
std::complex<double> mellin_prime(const bump_function& f, std::complex<double> alpha);

// Lemma-style expansion sum:
//   sum_{k=0}^N k!/(2k)! binom((alpha+2k-1)/2, k) h^(2k)(0)
//                M'(f)(alpha+2k) s^(alpha+2k)
// h_even_derivs[k] = h^(2k)(0).
std::complex<double> msexp_sum(const std::vector<double>& h_even_derivs, const bump_function& f,
                               std::complex<double> alpha, int N, double s);

// M' of a general smooth function q supported in [-T, T], continued in alpha.
// Derivatives come from the jet interface; `q_odd` asserts q is odd (which
// kills poles at even non-positive integers and enables the residue-ratio
// value at odd negative ones).
std::complex<double> mellin_prime_smooth(const smooth_fn& q, double support_hi,
                                         std::complex<double> alpha, bool q_odd);

// --- wide-precision path --------------------------------------------------
//
// M'(f)(n) at integer n >= -1 in the requested real type. The extraction
// pipeline consumes these; consistency between sampler and weights matters
// more than the absolute quadrature error, so both sides share this one
// implementation.
template <typename Real>
Real mellin_prime_at_integer(const bump_function& f, int n) {
    using std::log;
    const Real hi = Real(f.support_hi());
    const Real tol = std::numeric_limits<Real>::epsilon() * 16;
    if (n >= 1) {
        Real m = tanh_sinh<Real>(
            [&](Real x) { return f.eval<Real>(x) * ipow(x, n - 1); }, Real(0), hi, tol,
            std::is_same_v<Real, double> ? 12 : 16);
        return m * rgamma_half_value<Real>(n + 1);
    }
    if (n == 0) {
        if (f.parity_flag() != parity::odd) {
            throw std::domain_error("mellin_prime_at_integer: n=0 needs odd f");
        }
        // residue f(0) vanishes; finite part is -int f'(x) log(x) dx
        Real m = -tanh_sinh<Real>(
            [&](Real x) { return f.eval<Real>(x, 1) * log(x); }, Real(0), hi, tol,
            std::is_same_v<Real, double> ? 12 : 16);
        return m * rgamma_half_value<Real>(1);
    }
    if (n == -1) {
        if (f.parity_flag() != parity::odd) {
            throw std::domain_error("mellin_prime_at_integer: n=-1 needs odd f");
        }
        // both M and Gamma((.+1)/2) have simple poles; the ratio of residues
        // f'(0) and 2 survives
        return f.eval<Real>(Real(0), 1) / 2;
    }
    throw std::invalid_argument("mellin_prime_at_integer: n < -1 not needed on this path");
}

} // namespace hadex
