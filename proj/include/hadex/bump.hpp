#pragma once

#include "hadex/rational.hpp"
#include "hadex/real.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace hadex {

// Compactly supported smooth profiles built from two normalized kernels on
// (-1,1):
//   even: exp(-1/(1-t^2))
//   odd:  t * exp(-1/(1-t^2))
// Derivatives of any order are exact: writing u = 1/(1-t^2), every derivative
// is E(t) * sum c_{ij} t^i u^j with integer c_{ij}, E = exp(-u), and the
// recurrence  d/dt [t^i u^j E] = i t^{i-1} u^j E + 2j t^{i+1} u^{j+1} E
//                                - 2 t^{i+1} u^{j+2} E
// generates the tables. Finite differences die around order 6; this doesn't.
enum class bump_kernel { even, odd };

namespace detail {

struct kernel_term {
    int tpow, upow;
    bigint coeff;
};

// coefficient table for kernel derivative of given order (exact integers)
const std::vector<kernel_term>& kernel_table(bump_kernel k, int order);

template <typename Real>
Real kernel_eval(bump_kernel k, int order, Real t) {
    using std::exp;
    Real one_m = 1 - t * t;
    if (!(one_m > Real(1e-14))) return Real(0);
    Real u = 1 / one_m;
    Real e = exp(-u);
    if (e == 0) return Real(0);
    const auto& terms = kernel_table(k, order);
    Real acc = 0;
    for (const auto& term : terms) {
        acc += static_cast<Real>(term.coeff) * ipow(t, term.tpow) * ipow(u, term.upow);
    }
    return acc * e;
}

} // namespace detail

enum class parity { odd, even, none };

// A finite sum of affinely mapped kernels:  f(t) = sum w_a K_a((t-c_a)/h_a).
// Closed under reflection t -> -t and dilation, which is what odd/even parts
// and the scaling law need.
class bump_function {
public:
    struct atom {
        bump_kernel kernel;
        double center;
        double halfwidth; // > 0
        double weight;
    };

    bump_function() = default;
    explicit bump_function(std::vector<atom> atoms, parity p = parity::none);

    // canonical odd profile t*exp(-1/(1-t^2)) on (-1,1)
    static bump_function canonical_odd();
    // plain even bump exp(-1/(1-t^2)) on (-1,1)
    static bump_function plain_even();
    // single affinely placed atom
    static bump_function atom_bump(bump_kernel k, double center, double halfwidth,
                                   double weight = 1.0);

    template <typename Real>
    Real eval(Real t, int order = 0) const {
        Real acc = 0;
        for (const auto& a : atoms_) {
            Real y = (t - Real(a.center)) / Real(a.halfwidth);
            if (!(y > Real(-1) && y < Real(1))) continue;
            Real v = detail::kernel_eval(a.kernel, order, y);
            acc += Real(a.weight) * v / ipow(Real(a.halfwidth), order);
        }
        return acc;
    }

    double operator()(double t) const { return eval<double>(t); }

    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }
    parity parity_flag() const { return parity_; }
    const std::vector<atom>& atoms() const { return atoms_; }

    bump_function scaled(double s) const;    // t -> f(t/s)
    bump_function reflected() const;         // t -> f(-t)
    bump_function odd_part() const;
    bump_function even_part() const;

private:
    std::vector<atom> atoms_;
    double lo_ = 0, hi_ = 0;
    parity parity_ = parity::none;

    void merge_and_hull();
};

// f^(order)(t), zero outside support.
double eval_bump(const bump_function& f, double t, int order);

// Smooth monotone step: 0 for x <= 0, 1 for x >= 1. Values only.
double smoothstep(double x);

} // namespace hadex
