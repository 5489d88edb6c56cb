#pragma once

#include "hadex/bump.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <vector>

namespace hadex {

// Truncated Taylor series (jet) arithmetic: coeffs[k] = f^(k)(t0)/k!.
// Used to push exact derivatives through products, powers and quotients when
// pairing distributions along curves.
struct jet {
    std::vector<double> c;

    explicit jet(std::size_t len = 1) : c(len, 0.0) {}
    static jet constant(double v, std::size_t len) {
        jet j(len);
        j.c[0] = v;
        return j;
    }
    static jet variable(double v, std::size_t len) {
        jet j(len);
        j.c[0] = v;
        if (len > 1) j.c[1] = 1.0;
        return j;
    }

    std::size_t size() const { return c.size(); }
    double value() const { return c[0]; }
    double derivative(int k) const; // k-th derivative (k! * coeff)

    jet operator+(const jet& o) const;
    jet operator-(const jet& o) const;
    jet operator*(const jet& o) const;
    jet scale(double s) const;
    // jet^a for real exponent a; requires positive leading value
    jet pow(double a) const;
};

// A scalar function with derivatives of arbitrary order at any point of its
// domain. The lightweight interface the line-pairing code works against.
class smooth_fn {
public:
    virtual ~smooth_fn() = default;
    virtual jet eval_jet(double t, std::size_t len) const = 0;
    double operator()(double t) const { return eval_jet(t, 1).value(); }
    double derivative(double t, int order) const {
        return eval_jet(t, order + 1).derivative(order);
    }
};

using smooth_ptr = std::shared_ptr<const smooth_fn>;

smooth_ptr smooth_constant(double v);
smooth_ptr smooth_polynomial(std::vector<double> coeffs); // sum c_k t^k
smooth_ptr smooth_from_bump(bump_function f);
smooth_ptr smooth_product(smooth_ptr a, smooth_ptr b);

} // namespace hadex
