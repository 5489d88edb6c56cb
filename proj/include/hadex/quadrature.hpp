#pragma once

#include "hadex/real.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace hadex {

// Gauss-Legendre nodes/weights on [-1,1], computed by Newton iteration on
// the Legendre recurrence. Works for any real type; cached per (Real, n).
template <typename Real>
struct gauss_rule {
    std::vector<Real> nodes, weights;

    explicit gauss_rule(int n) {
        using std::abs;
        using std::cos;
        nodes.resize(n);
        weights.resize(n);
        const Real eps = std::numeric_limits<Real>::epsilon();
        for (int i = 0; i < (n + 1) / 2; ++i) {
            // Chebyshev-based initial guess in double, then Newton in Real.
            Real x = Real(-std::cos(M_PI * (i + 0.75) / (n + 0.5)));
            Real dp = 0;
            for (int it = 0; it < 200; ++it) {
                Real p0 = 1, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1);
                Real dx = p1 / dp;
                x -= dx;
                if (abs(dx) < 4 * eps * (Real(1) + abs(x))) break;
            }
            nodes[i] = x;
            nodes[n - 1 - i] = -x;
            Real w = 2 / ((1 - x * x) * dp * dp);
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if (n % 2 == 1) nodes[n / 2] = 0;
    }

    static const gauss_rule& cached(int n) {
        static std::map<int, gauss_rule> cache;
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, gauss_rule(n)).first;
        return it->second;
    }

    template <typename F>
    auto integrate(F&& f, Real a, Real b) const {
        Real mid = (a + b) / 2, half = (b - a) / 2;
        auto acc = f(mid + half * nodes[0]) * (weights[0] * half);
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            acc += f(mid + half * nodes[i]) * (weights[i] * half);
        }
        return acc;
    }
};

// tanh-sinh (double exponential) quadrature on [a,b]. Excellent for smooth
// integrands as well as integrable endpoint singularities (algebraic or
// logarithmic), which is what the Mellin transforms need. Nodes are placed
// by their distance to the nearer endpoint so extreme nodes never collapse
// onto a singular endpoint.
template <typename Real, typename F>
auto tanh_sinh(F&& f, Real a, Real b, Real tol, int max_level = 12) {
    using std::abs;
    using std::cosh;
    using std::exp;
    using std::sinh;
    const Real half = (b - a) / 2, mid = (a + b) / 2;
    const Real pihalf = pi_v<Real>() / 2;
    const Real tmax = (std::is_same_v<Real, double>) ? Real(3.8) : Real(5.6);

    auto weighted = [&](Real t) {
        Real u = pihalf * sinh(t);
        Real au = u < 0 ? -u : u;
        Real e2 = exp(-2 * au);
        // 1 - |tanh(u)| and sech^2(u), both cancellation-free
        Real delta = 2 * e2 / (1 + e2);
        Real sech2 = 4 * e2 / ((1 + e2) * (1 + e2));
        Real w = pihalf * cosh(t) * sech2 * half;
        if (delta == 0 || w == 0) return decltype(f(mid) * w){};
        Real x = (t >= 0) ? b - half * delta : a + half * delta;
        if (x <= a || x >= b) return decltype(f(mid) * w){};
        return f(x) * w;
    };

    Real h = tmax;
    auto sum = weighted(Real(0)) * h;
    decltype(sum) prev = sum;
    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        decltype(sum) add{};
        // new nodes at odd multiples of h
        for (Real t = h; t <= tmax; t += 2 * h) {
            add += weighted(t) + weighted(-t);
        }
        sum = sum / Real(2) + add * h;
        if (level >= 4 && abs(sum - prev) <= tol * (Real(1) + abs(sum))) return sum;
        prev = sum;
    }
    return sum;
}

// Adaptive Gauss on [a,b]: split until two refinement levels agree. Smooth,
// possibly oscillatory integrands; deterministic evaluation order.
template <typename Real, typename F>
auto adaptive_gauss(F&& f, Real a, Real b, Real tol, int depth = 0, int order = 16)
    -> decltype(f(a) * a) {
    using std::abs;
    const auto& lo = gauss_rule<Real>::cached(order);
    const auto& hi = gauss_rule<Real>::cached(2 * order);
    auto coarse = lo.integrate(f, a, b);
    auto fine = hi.integrate(f, a, b);
    if (abs(fine - coarse) <= tol || depth >= 24) return fine;
    Real mid = (a + b) / 2;
    return adaptive_gauss(f, a, mid, tol / 2, depth + 1, order) +
           adaptive_gauss(f, mid, b, tol / 2, depth + 1, order);
}

// Composite Gauss with panels graded geometrically toward the endpoint `sing`
// (a or b). Handles integrable algebraic singularities x^nu, nu > -1.
template <typename Real, typename F>
auto graded_gauss(F&& f, Real a, Real b, Real sing_at, int levels = 40, int order = 16)
    -> decltype(f(a) * a) {
    const auto& rule = gauss_rule<Real>::cached(order);
    bool at_a = sing_at <= (a + b) / 2;
    decltype(f(a) * a) sum{};
    Real far = at_a ? b : a;
    Real near_pt = at_a ? a : b;
    Real w = (far - near_pt) / 2; // signed from the singular end
    Real lo = near_pt + w;
    // panels [near+w, far], [near+w/2, near+w], ...
    sum += at_a ? rule.integrate(f, lo, far) : rule.integrate(f, far, lo);
    for (int l = 1; l < levels; ++l) {
        Real w2 = w / 2;
        Real lo2 = near_pt + w2;
        sum += at_a ? rule.integrate(f, lo2, lo) : rule.integrate(f, lo, lo2);
        w = w2;
        lo = lo2;
    }
    return sum;
}

} // namespace hadex
