#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hadex/mellin.hpp"
#include "hadex/quadrature.hpp"

#include <cmath>
#include <random>

using namespace hadex;

namespace {

// independent quadrature scheme (graded composite Gauss, not tanh-sinh)
std::complex<double> mellin_oracle(const bump_function& f, std::complex<double> alpha) {
    auto integrand = [&](double x) -> std::complex<double> {
        double v = f(x);
        if (v == 0.0 || x <= 0.0) return 0.0;
        return v * std::exp((alpha - 1.0) * std::log(x));
    };
    return graded_gauss<double>(integrand, 0.0, f.support_hi(), 0.0, 48, 24);
}

bump_function asym_bump() { return bump_function::atom_bump(bump_kernel::even, 0.25, 0.9); }

} // namespace

TEST_CASE("direct transform basics") {
    bump_function zero(std::vector<bump_function::atom>{});
    CHECK(std::abs(mellin(zero, 2.0)) == 0.0);

    auto f = bump_function::canonical_odd();
    // alpha = 1 is the plain integral over (0,inf)
    std::complex<double> m1 = mellin(f, 1.0);
    std::complex<double> o1 = mellin_oracle(f, 1.0);
    CHECK(std::abs(m1 - o1) <= 1e-12 * (1 + std::abs(m1)));

    std::complex<double> m2 = mellin(f, 2.0);
    std::complex<double> o2 = mellin_oracle(f, 2.0);
    CHECK(std::abs(m2 - o2) <= 1e-10 * (1 + std::abs(m2)));
}

TEST_CASE("continuation agrees with the direct transform on the overlap strip") {
    auto f = bump_function::canonical_odd();
    auto g = asym_bump();
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> re(0.05, 1.95), im(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        std::complex<double> alpha(re(rng), im(rng));
        for (const auto& h : {f, g}) {
            auto cont = mellin_continued(h, alpha);
            REQUIRE(!cont.is_pole());
            std::complex<double> direct = mellin(h, alpha);
            CHECK(std::abs(cont.value - direct) <= 1e-8 * (1 + std::abs(direct)));
        }
    }
}

TEST_CASE("residues at non-positive integers") {
    // Res_{-k} M(f) = f^(k)(0)/k!. For a parity-free bump every residue is
    // visible; the oracle is eps * M(-k + eps) -> residue.
    auto g = asym_bump();
    for (int k = 0; k <= 6; ++k) {
        auto mv = mellin_continued(g, std::complex<double>(-double(k), 0.0));
        REQUIRE(mv.is_pole());
        double fact = 1;
        for (int i = 2; i <= k; ++i) fact *= i;
        double expected = eval_bump(g, 0.0, k) / fact;
        CHECK(mv.residue.real() == doctest::Approx(expected).epsilon(1e-8));
        CHECK(std::abs(mv.residue.imag()) < 1e-12);

        // independent limit: eps * M(-k+eps)
        double eps = 1e-5;
        auto near_val = mellin_continued(g, std::complex<double>(-double(k) + 2e-6, 0.0));
        (void)near_val;
        auto off = mellin_continued(g, std::complex<double>(-double(k) + eps, 1e-7));
        std::complex<double> lim = (std::complex<double>(-double(k) + eps, 1e-7) +
                                    std::complex<double>(double(k), 0.0)) *
                                   off.value;
        CHECK(std::abs(lim - mv.residue) <= 2e-4 * (1 + std::abs(mv.residue)));
    }

    // odd f: residues vanish at even -k, appear at odd -k
    auto f = bump_function::canonical_odd();
    auto even_case = mellin_continued(f, std::complex<double>(-2.0, 0.0));
    CHECK(!even_case.is_pole());
    auto odd_case = mellin_continued(f, std::complex<double>(-1.0, 0.0));
    REQUIRE(odd_case.is_pole());
    CHECK(odd_case.residue.real() == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
}

TEST_CASE("near-pole evaluation avoids the quotient") {
    auto g = asym_bump();
    // value just off the pole must match residue/eps + finite part; compare
    // against a point evaluated by the plain recursion outside the window
    double eps = 5e-7;
    auto close_v = mellin_continued(g, std::complex<double>(-1.0 + eps, 0.0));
    auto ref = mellin_continued(g, std::complex<double>(-1.0 + 2e-5, 0.0));
    auto pole = mellin_continued(g, std::complex<double>(-1.0, 0.0));
    std::complex<double> pred =
        close_v.value - pole.residue * (1.0 / eps - 1.0 / 2e-5);
    CHECK(std::abs(pred - ref.value) <= 1e-4 * (1 + std::abs(ref.value)));
}

TEST_CASE("modified transform at regular and cancelled-pole points") {
    auto f = bump_function::canonical_odd();
    // alpha = 1: Gamma(1) = 1
    std::complex<double> v1 = mellin_prime(f, 1.0);
    CHECK(std::abs(v1 - mellin(f, 1.0)) <= 1e-10 * (1 + std::abs(v1)));

    // alpha = -1: both factors have simple poles; ratio of residues is
    // f'(0)/2 (cross-checked by the continuation limit below)
    std::complex<double> vm1 = mellin_prime(f, -1.0);
    CHECK(vm1.real() == doctest::Approx(std::exp(-1.0) / 2).epsilon(1e-10));
    for (double eps : {1e-3, 1e-4}) {
        std::complex<double> lo = mellin_prime(f, std::complex<double>(-1.0 - eps, 0.0));
        std::complex<double> hi = mellin_prime(f, std::complex<double>(-1.0 + eps, 0.0));
        CHECK(std::abs(0.5 * (lo + hi) - vm1) <= 1e-5 * (1 + std::abs(vm1)));
    }

    // alpha = -2: odd f has no Mellin pole, Gamma is finite, value finite
    std::complex<double> vm2 = mellin_prime(f, -2.0);
    CHECK(std::isfinite(vm2.real()));

    // pole-freeness at every integer in [-9, 9]
    for (int n = -9; n <= 9; ++n) {
        std::complex<double> v = mellin_prime(f, std::complex<double>(double(n), 0.0));
        CHECK(std::isfinite(v.real()));
        CHECK(std::isfinite(v.imag()));
    }

    // non-odd f at a negative even integer: uncancelled pole signals
    CHECK_THROWS_AS((void)mellin_prime(asym_bump(), -2.0), std::domain_error);
}

TEST_CASE("scaling law M(f_s)(alpha) = s^alpha M(f)(alpha)") {
    auto f = bump_function::canonical_odd();
    for (double s : {0.1, 0.25, 0.3, 0.5}) {
        auto fs = f.scaled(s);
        for (int n = -3; n <= 3; ++n) {
            std::complex<double> alpha(double(n), 0.0);
            std::complex<double> lhs = mellin_prime(fs, alpha);
            std::complex<double> rhs = std::pow(s, double(n)) * mellin_prime(f, alpha);
            CHECK(std::abs(lhs - rhs) <= 1e-10 * (1 + std::abs(rhs)));
        }
        // plain transform at alpha = 2
        std::complex<double> l2 = mellin(fs, 2.0), r2 = s * s * mellin(f, 2.0);
        CHECK(std::abs(l2 - r2) <= 1e-10 * (1 + std::abs(r2)));
    }
}

TEST_CASE("expansion sum reduces correctly for constant h") {
    auto f = bump_function::canonical_odd();
    // h == 1: only k = 0 survives: M'(f)(alpha) s^alpha
    std::complex<double> alpha(1.3, 0.0);
    double s = 0.22;
    std::complex<double> sum = msexp_sum({1.0, 0.0, 0.0}, f, alpha, 2, s);
    std::complex<double> expect = mellin_prime(f, alpha) * std::pow(s, 1.3);
    CHECK(std::abs(sum - expect) <= 1e-12 * (1 + std::abs(expect)));
}

TEST_CASE("expansion sum against direct quadrature for h(t) = t^2") {
    auto f = bump_function::canonical_odd();
    // (t^2 f_s)_odd = t^2 f_s, and M'(t^2 f_s)(alpha) = M(f_s)(alpha+2)/Gamma((alpha+1)/2)
    std::complex<double> alpha(1.0, 0.0);
    auto direct = [&](double s) {
        auto fs = f.scaled(s);
        return mellin(fs, alpha + 2.0) * rgamma((alpha + 1.0) / 2.0);
    };
    auto err_at = [&](double s) {
        std::complex<double> sum = msexp_sum({0.0, 2.0}, f, alpha, 1, s);
        return std::abs(sum - direct(s));
    };
    // remainder should scale like s^{2N + Re alpha} = s^3
    double e1 = err_at(0.2), e2 = err_at(0.1);
    double slope = std::log2(e1 / e2);
    CHECK(slope == doctest::Approx(3.0).epsilon(0.1));
}

TEST_CASE("remainder decay for h with vanishing derivatives") {
    // |M(h f_s)(alpha)| <= C s^{k + Re alpha} when the first k derivatives of
    // h vanish at 0. Take h(t) = t^k, alpha = 1, slope in log2 over s-halvings.
    auto f = bump_function::canonical_odd();
    for (int k : {1, 2, 3}) {
        std::vector<double> errs;
        for (int e = 3; e <= 8; ++e) {
            double s = std::pow(2.0, -e);
            auto fs = f.scaled(s);
            // M(t^k f_s)(1) = M(f_s)(1 + k)
            errs.push_back(std::abs(mellin(fs, 1.0 + k)));
        }
        for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
            double slope = std::log2(errs[i] / errs[i + 1]);
            CHECK(slope == doctest::Approx(double(k) + 1.0).epsilon(0.1));
        }
    }
}

TEST_CASE("smooth-path modified transform matches the bump path") {
    auto f = bump_function::canonical_odd();
    auto q = smooth_from_bump(f);
    for (double a : {2.5, 1.0, 0.0, -1.0, -2.2}) {
        std::complex<double> alpha(a, 0.0);
        std::complex<double> s = mellin_prime_smooth(*q, f.support_hi(), alpha, true);
        std::complex<double> b = mellin_prime(f, alpha);
        CHECK(std::abs(s - b) <= 2e-8 * (1 + std::abs(b)));
    }
}
