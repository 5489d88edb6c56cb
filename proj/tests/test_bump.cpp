#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hadex/bump.hpp"
#include "hadex/jets.hpp"
#include "hadex/quadrature.hpp"

#include <cmath>
#include <random>

using namespace hadex;

namespace {

// order-4 central stencil, the independent check on the closed-form tables
double fd_derivative(const bump_function& f, double t, int order, double h) {
    if (order == 0) return f(t);
    auto g = [&](double x) { return fd_derivative(f, x, order - 1, h); };
    return (-g(t + 2 * h) + 8 * g(t + h) - 8 * g(t - h) + g(t - 2 * h)) / (12 * h);
}

} // namespace

TEST_CASE("canonical bump values and derivatives") {
    auto f = bump_function::canonical_odd();
    CHECK(f.parity_flag() == parity::odd);
    CHECK(f.support_lo() == -1.0);
    CHECK(f.support_hi() == 1.0);

    CHECK(eval_bump(f, 0.0, 0) == 0.0); // odd function
    // f'(0) = e^{-1}
    CHECK(eval_bump(f, 0.0, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    // outside support, any order
    CHECK(eval_bump(f, 1.5, 0) == 0.0);
    CHECK(eval_bump(f, -2.0, 7) == 0.0);
    CHECK(eval_bump(f, 1.0, 3) == 0.0);

    // finite-difference oracle at moderate orders (the stencil error grows
    // with order; past ~4 it is the oracle that gives out, not the tables)
    for (int order = 1; order <= 4; ++order) {
        for (double t : {0.0, 0.3, -0.55, 0.8}) {
            double exact = eval_bump(f, t, order);
            double fd = fd_derivative(f, t, order, 1e-2 / (1 << order));
            CHECK(exact == doctest::Approx(fd).epsilon(order < 4 ? 1e-5 : 1e-4));
        }
    }
}

TEST_CASE("high-order derivatives stay consistent under differentiation of the table") {
    // d/dt f^(n) should equal f^(n+1): check via a fine finite difference of
    // the exact order-n evaluation
    auto f = bump_function::plain_even();
    for (int n : {6, 10, 14}) {
        for (double t : {0.2, -0.45, 0.7}) {
            double h = 1e-6;
            double fd = (f.eval<double>(t + h, n) - f.eval<double>(t - h, n)) / (2 * h);
            double exact = f.eval<double>(t, n + 1);
            CHECK(exact == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("odd and even parts") {
    auto f = bump_function::canonical_odd();
    auto g = bump_function::plain_even();

    // odd f -> odd_part(f) = f
    auto fo = f.odd_part();
    for (double t : {-0.8, -0.2, 0.1, 0.6}) {
        CHECK(fo(t) == doctest::Approx(f(t)).epsilon(1e-15));
    }
    // even g -> odd_part(g) = 0
    auto go = g.odd_part();
    CHECK(go.atoms().empty());

    // asymmetric bump: odd/even parts recombine and match the definition
    auto h = bump_function::atom_bump(bump_kernel::even, 0.35, 0.9);
    auto ho = h.odd_part();
    auto he = h.even_part();
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(-1.5, 1.5);
    for (int i = 0; i < 50; ++i) {
        double t = uni(rng);
        CHECK(ho(t) == doctest::Approx(0.5 * (h(t) - h(-t))).epsilon(1e-14));
        CHECK(ho(t) + he(t) == doctest::Approx(h(t)).epsilon(1e-14));
        CHECK(ho(-t) == doctest::Approx(-ho(t)).epsilon(1e-14));
    }
}

TEST_CASE("scaling maps support and values") {
    auto f = bump_function::canonical_odd();
    auto fs = f.scaled(0.5);
    CHECK(fs.support_lo() == doctest::Approx(-0.5));
    CHECK(fs.support_hi() == doctest::Approx(0.5));
    for (double t : {-0.4, 0.1, 0.3}) {
        CHECK(fs(t) == doctest::Approx(f(t / 0.5)).epsilon(1e-15));
    }
    auto f1 = f.scaled(1.0);
    for (double t : {-0.9, 0.25}) CHECK(f1(t) == f(t));
}

TEST_CASE("jet arithmetic matches bump derivatives through products") {
    auto b = bump_function::atom_bump(bump_kernel::even, 0.1, 0.8);
    auto p = smooth_product(smooth_from_bump(b), smooth_polynomial({1.0, 2.0, 3.0}));
    // derivative of b(t)(1+2t+3t^2) via jets vs Leibniz by hand
    for (double t : {-0.3, 0.0, 0.42}) {
        double b0 = b.eval<double>(t, 0), b1 = b.eval<double>(t, 1), b2 = b.eval<double>(t, 2);
        double q0 = 1 + 2 * t + 3 * t * t, q1 = 2 + 6 * t, q2 = 6;
        jet j = p->eval_jet(t, 3);
        CHECK(j.derivative(0) == doctest::Approx(b0 * q0).epsilon(1e-13));
        CHECK(j.derivative(1) == doctest::Approx(b1 * q0 + b0 * q1).epsilon(1e-13));
        CHECK(j.derivative(2) ==
              doctest::Approx(b2 * q0 + 2 * b1 * q1 + b0 * q2).epsilon(1e-13));
    }
}

TEST_CASE("jet power recurrence") {
    // (1+t)^a jets at 0 are binomial coefficients
    jet u = jet::variable(1.0, 6);
    jet w = u.pow(2.5);
    double binom = 1;
    for (int k = 0; k < 6; ++k) {
        CHECK(w.c[k] == doctest::Approx(binom).epsilon(1e-13));
        binom *= (2.5 - k) / (k + 1);
    }
}

TEST_CASE("smoothstep plateau") {
    CHECK(smoothstep(-0.5) == 0.0);
    CHECK(smoothstep(0.0) == 0.0);
    CHECK(smoothstep(1.0) == 1.0);
    CHECK(smoothstep(2.0) == 1.0);
    CHECK(smoothstep(0.5) == doctest::Approx(0.5));
    for (double x : {0.1, 0.35, 0.8}) {
        CHECK(smoothstep(x) + smoothstep(1 - x) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("quadrature sanity") {
    // smooth: int_0^1 x^3 = 1/4
    double v = tanh_sinh<double>([](double x) { return x * x * x; }, 0.0, 1.0, 1e-14);
    CHECK(v == doctest::Approx(0.25).epsilon(1e-13));
    // endpoint singularity: int_0^1 x^{-1/2} = 2
    double w = tanh_sinh<double>([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-14);
    CHECK(w == doctest::Approx(2.0).epsilon(1e-12));
    // log singularity: int_0^1 log(x) = -1
    double l = tanh_sinh<double>([](double x) { return std::log(x); }, 0.0, 1.0, 1e-14);
    CHECK(l == doctest::Approx(-1.0).epsilon(1e-12));
    // adaptive + graded against each other on an algebraic endpoint factor
    auto f = [](double x) { return std::pow(1.0 - x * x, 2.5); };
    double a = adaptive_gauss<double>(f, 0.0, 1.0, 1e-12);
    double g = graded_gauss<double>(f, 0.0, 1.0, 1.0);
    CHECK(a == doctest::Approx(g).epsilon(1e-11));

    // wide type roundtrip
    quad q = tanh_sinh<quad>([](quad x) { return x * x; }, quad(0), quad(1), quad(1e-30), 16);
    CHECK(static_cast<double>(q) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}
