#include "hadex/mellin.hpp"

#include <cmath>

namespace hadex {

namespace {

constexpr double near_pole_window = 1e-6;

// int f^(order)(x) x^(alpha-1) dx over supp(f) cap (0,inf); Re(alpha) > 0.
std::complex<double> mellin_direct(const bump_function& f, int order,
                                   std::complex<double> alpha) {
    double hi = f.support_hi();
    if (hi <= 0 || f.atoms().empty()) return 0.0;
    auto integrand = [&](double x) -> std::complex<double> {
        double v = f.eval<double>(x, order);
        if (v == 0.0) return 0.0;
        return v * std::exp((alpha - 1.0) * std::log(x));
    };
    return tanh_sinh<double>(integrand, 0.0, hi, 1e-14, 13);
}

// continuation by M(f)(a) = (-1)^k M(f^(k))(a+k) / prod_{j<k}(a+j); the
// caller keeps alpha away from the poles of the right hand side.
std::complex<double> mellin_rec(const bump_function& f, std::complex<double> alpha) {
    int k = 0;
    if (alpha.real() < 1.0) k = static_cast<int>(std::ceil(1.0 - alpha.real()));
    std::complex<double> num = mellin_direct(f, k, alpha + double(k));
    if (k % 2 != 0) num = -num;
    std::complex<double> denom = 1.0;
    for (int j = 0; j < k; ++j) denom *= alpha + double(j);
    return num / denom;
}

// residue of M(f) at alpha = -p:  f^(p)(0)/p!.  (The recursion prefactor
// (-1)^k cancels against prod_{j<k}(-k+j) = (-1)^k k!, so no alternating
// sign survives; parity flags give structurally exact zeros.)
double residue_at(const bump_function& f, int p) {
    if (f.parity_flag() == parity::odd && p % 2 == 0) return 0.0;
    if (f.parity_flag() == parity::even && p % 2 == 1) return 0.0;
    double d = f.eval<double>(0.0, p);
    double fact = 1;
    for (int i = 2; i <= p; ++i) fact *= i;
    return d / fact;
}

// finite part at a pole location: symmetric average kills the odd Laurent
// terms, Richardson in h kills the h^2 term.
std::complex<double> finite_part_at(const bump_function& f, int p) {
    auto sym = [&](double h) {
        return 0.5 * (mellin_rec(f, std::complex<double>(-double(p) + h, 0.0)) +
                      mellin_rec(f, std::complex<double>(-double(p) - h, 0.0)));
    };
    const double h = 2e-2;
    std::complex<double> a1 = sym(h), a2 = sym(h / 2), a3 = sym(h / 4);
    std::complex<double> r1 = (4.0 * a2 - a1) / 3.0, r2 = (4.0 * a3 - a2) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

std::optional<int> nearby_pole(std::complex<double> alpha) {
    if (std::abs(alpha.imag()) > near_pole_window) return std::nullopt;
    double r = std::round(alpha.real());
    if (r > 0.5 || std::abs(alpha.real() - r) > near_pole_window) return std::nullopt;
    return static_cast<int>(-r);
}

} // namespace

std::complex<double> cbinom(std::complex<double> alpha, int k) {
    if (k < 0) return 0.0;
    std::complex<double> num = 1.0;
    for (int i = 0; i < k; ++i) num *= alpha - double(i);
    double fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    return num / fact;
}

std::complex<double> mellin(const bump_function& f, std::complex<double> alpha) {
    if (alpha.real() <= 0) throw std::invalid_argument("mellin: requires Re(alpha) > 0");
    return mellin_direct(f, 0, alpha);
}

mero_value mellin_continued(const bump_function& f, std::complex<double> alpha) {
    mero_value out;
    auto pole = nearby_pole(alpha);
    if (!pole) {
        out.value = mellin_rec(f, alpha);
        return out;
    }
    int p = *pole;
    double r = residue_at(f, p);
    std::complex<double> eps = alpha + double(p);
    if (r != 0.0 && std::abs(eps) < 1e-13) {
        out.kind = mero_value::kind_t::pole;
        out.residue = r;
        out.location = -double(p);
        return out;
    }
    out.value = finite_part_at(f, p);
    if (r != 0.0) out.value += r / eps;
    return out;
}

std::complex<double> mellin_prime(const bump_function& f, std::complex<double> alpha) {
    std::complex<double> half = (alpha + 1.0) / 2.0;
    bool gamma_pole = std::abs(half.imag()) < near_pole_window / 2 &&
                      half.real() < 0.5 && std::abs(half.real() - std::round(half.real())) <
                                               near_pole_window / 2;
    mero_value m = mellin_continued(f, alpha);
    if (!gamma_pole) {
        if (m.is_pole()) {
            throw std::domain_error("mellin_prime: uncancelled Mellin pole at alpha = " +
                                    std::to_string(alpha.real()));
        }
        return m.value * rgamma(half);
    }
    // Gamma((alpha+1)/2) pole at half = -j, i.e. alpha = -(2j+1)
    int j = static_cast<int>(std::round(-half.real()));
    if (m.is_pole()) {
        // ratio of residues; residue of Gamma((.+1)/2) in alpha is 2(-1)^j/j!
        double jf = 1;
        for (int i = 2; i <= j; ++i) jf *= i;
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        return m.residue * sign * jf / 2.0;
    }
    // finite Mellin value, 1/Gamma = 0
    return 0.0;
}

std::complex<double> msexp_sum(const std::vector<double>& h_even_derivs, const bump_function& f,
                               std::complex<double> alpha, int N, double s) {
    if (N < 0) throw std::invalid_argument("msexp_sum: N >= 0 required");
    std::complex<double> acc = 0.0;
    double fact_k = 1, fact_2k = 1;
    for (int k = 0; k <= N; ++k) {
        if (k > 0) {
            fact_k *= k;
            fact_2k *= (2 * k - 1) * (2 * k);
        }
        double h2k = (static_cast<std::size_t>(k) < h_even_derivs.size()) ? h_even_derivs[k] : 0.0;
        if (h2k == 0.0) continue;
        std::complex<double> a2k = alpha + double(2 * k);
        std::complex<double> term = (fact_k / fact_2k) * cbinom((a2k - 1.0) / 2.0, k) * h2k *
                                    mellin_prime(f, a2k) * std::exp(a2k * std::log(s));
        acc += term;
    }
    return acc;
}

std::complex<double> mellin_prime_smooth(const smooth_fn& q, double support_hi,
                                         std::complex<double> alpha, bool q_odd) {
    // continuation with derivatives from jets; only the odd case needs the
    // pole bookkeeping, and there poles sit at odd negative integers.
    auto direct = [&](int order, std::complex<double> a) -> std::complex<double> {
        auto integrand = [&](double x) -> std::complex<double> {
            double v = q.eval_jet(x, order + 1).derivative(order);
            if (v == 0.0) return 0.0;
            return v * std::exp((a - 1.0) * std::log(x));
        };
        return tanh_sinh<double>(integrand, 0.0, support_hi, 1e-13, 13);
    };
    auto rec = [&](std::complex<double> a) {
        int k = 0;
        if (a.real() < 1.0) k = static_cast<int>(std::ceil(1.0 - a.real()));
        std::complex<double> num = direct(k, a + double(k));
        if (k % 2 != 0) num = -num;
        std::complex<double> denom = 1.0;
        for (int j = 0; j < k; ++j) denom *= a + double(j);
        return num / denom;
    };

    std::complex<double> half = (alpha + 1.0) / 2.0;
    bool gamma_pole = std::abs(half.imag()) < near_pole_window / 2 &&
                      half.real() < 0.5 && std::abs(half.real() - std::round(half.real())) <
                                               near_pole_window / 2;
    auto pole = nearby_pole(alpha);
    if (!pole) {
        return rec(alpha) * rgamma(half);
    }
    int p = *pole;
    bool mellin_pole = !q_odd || (p % 2 == 1);
    if (!mellin_pole) {
        // residue vanishes; symmetric average for the finite part
        auto sym = [&](double h) {
            return 0.5 * (rec(std::complex<double>(-double(p) + h, 0.0)) +
                          rec(std::complex<double>(-double(p) - h, 0.0)));
        };
        const double h = 2e-2;
        std::complex<double> a1 = sym(h), a2 = sym(h / 2), a3 = sym(h / 4);
        std::complex<double> r1 = (4.0 * a2 - a1) / 3.0, r2 = (4.0 * a3 - a2) / 3.0;
        return (16.0 * r2 - r1) / 15.0 * rgamma(half);
    }
    if (!gamma_pole) {
        throw std::domain_error("mellin_prime_smooth: uncancelled pole");
    }
    // both poles: residue ratio, residue of M is q^(p)(0)/p!
    int j = (p - 1) / 2;
    double pf = 1, jf = 1;
    for (int i = 2; i <= p; ++i) pf *= i;
    for (int i = 2; i <= j; ++i) jf *= i;
    double rm = q.eval_jet(0.0, p + 1).derivative(p) / pf;
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    return rm * sign * jf / 2.0;
}

} // namespace hadex
