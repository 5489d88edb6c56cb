#include "hadex/jets.hpp"

#include <stdexcept>

namespace hadex {

double jet::derivative(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c.size()) {
        throw std::out_of_range("jet::derivative: order beyond jet length");
    }
    double fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    return c[k] * fact;
}

jet jet::operator+(const jet& o) const {
    jet r(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

jet jet::operator-(const jet& o) const {
    jet r(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

jet jet::operator*(const jet& o) const {
    std::size_t n = std::max(c.size(), o.c.size());
    jet r(n);
    for (std::size_t i = 0; i < c.size() && i < n; ++i) {
        if (c[i] == 0.0) continue;
        for (std::size_t j = 0; j < o.c.size() && i + j < n; ++j) {
            r.c[i + j] += c[i] * o.c[j];
        }
    }
    return r;
}

jet jet::scale(double s) const {
    jet r = *this;
    for (auto& x : r.c) x *= s;
    return r;
}

jet jet::pow(double a) const {
    // w = u^a satisfies u w' = a u' w; standard coefficient recurrence.
    if (!(c[0] > 0)) throw std::domain_error("jet::pow: leading value must be positive");
    std::size_t n = c.size();
    jet w(n);
    w.c[0] = std::pow(c[0], a);
    for (std::size_t k = 1; k < n; ++k) {
        double acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += (a * j - (k - j)) * c[j] * w.c[k - j];
        }
        w.c[k] = acc / (k * c[0]);
    }
    return w;
}

namespace {

class constant_fn final : public smooth_fn {
public:
    explicit constant_fn(double v) : v_(v) {}
    jet eval_jet(double, std::size_t len) const override { return jet::constant(v_, len); }

private:
    double v_;
};

class polynomial_fn final : public smooth_fn {
public:
    explicit polynomial_fn(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}
    jet eval_jet(double t, std::size_t len) const override {
        jet x = jet::variable(t, len);
        jet acc = jet::constant(0.0, len);
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            acc = acc * x + jet::constant(coeffs_[k], len);
        }
        return acc;
    }

private:
    std::vector<double> coeffs_;
};

class bump_fn final : public smooth_fn {
public:
    explicit bump_fn(bump_function f) : f_(std::move(f)) {}
    jet eval_jet(double t, std::size_t len) const override {
        jet r(len);
        double fact = 1;
        for (std::size_t k = 0; k < len; ++k) {
            if (k > 1) fact *= k;
            r.c[k] = f_.eval<double>(t, static_cast<int>(k)) / fact;
        }
        return r;
    }

private:
    bump_function f_;
};

class product_fn final : public smooth_fn {
public:
    product_fn(smooth_ptr a, smooth_ptr b) : a_(std::move(a)), b_(std::move(b)) {}
    jet eval_jet(double t, std::size_t len) const override {
        return a_->eval_jet(t, len) * b_->eval_jet(t, len);
    }

private:
    smooth_ptr a_, b_;
};

} // namespace

smooth_ptr smooth_constant(double v) { return std::make_shared<constant_fn>(v); }

smooth_ptr smooth_polynomial(std::vector<double> coeffs) {
    return std::make_shared<polynomial_fn>(std::move(coeffs));
}

smooth_ptr smooth_from_bump(bump_function f) { return std::make_shared<bump_fn>(std::move(f)); }

smooth_ptr smooth_product(smooth_ptr a, smooth_ptr b) {
    return std::make_shared<product_fn>(std::move(a), std::move(b));
}

} // namespace hadex
