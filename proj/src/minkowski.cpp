#include "hadex/minkowski.hpp"

#include "hadex/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace hadex {

lorentz_vector::lorentz_vector(std::vector<double> comps) : c(std::move(comps)) {
    if (c.size() < 2) throw std::invalid_argument("lorentz_vector: need d >= 2");
    for (double v : c) {
        if (!std::isfinite(v)) throw std::invalid_argument("lorentz_vector: non-finite component");
    }
}

lorentz_vector lorentz_vector::zero(int d) { return lorentz_vector(std::vector<double>(d, 0.0)); }

lorentz_vector lorentz_vector::basis(int d, int i) {
    std::vector<double> v(d, 0.0);
    v.at(i) = 1.0;
    return lorentz_vector(std::move(v));
}

lorentz_vector operator+(const lorentz_vector& a, const lorentz_vector& b) {
    lorentz_vector r = a;
    for (int i = 0; i < a.dim(); ++i) r.c[i] += b.c[i];
    return r;
}

lorentz_vector operator-(const lorentz_vector& a, const lorentz_vector& b) {
    lorentz_vector r = a;
    for (int i = 0; i < a.dim(); ++i) r.c[i] -= b.c[i];
    return r;
}

lorentz_vector operator*(double s, const lorentz_vector& a) {
    lorentz_vector r = a;
    for (auto& v : r.c) v *= s;
    return r;
}

double eta(const lorentz_vector& x, const lorentz_vector& y) {
    double acc = -x.c[0] * y.c[0];
    for (int i = 1; i < x.dim(); ++i) acc += x.c[i] * y.c[i];
    return acc;
}

double gamma_form(const lorentz_vector& x) {
    double acc = x.c[0] * x.c[0];
    for (int i = 1; i < x.dim(); ++i) acc -= x.c[i] * x.c[i];
    return acc;
}

double edot(const lorentz_vector& x, const lorentz_vector& y) {
    double acc = 0;
    for (int i = 0; i < x.dim(); ++i) acc += x.c[i] * y.c[i];
    return acc;
}

double enorm(const lorentz_vector& x) { return std::sqrt(edot(x, x)); }

causal_class classify(const lorentz_vector& x) {
    double g = gamma_form(x);
    if (g > 0) return causal_class::timelike;
    if (g < 0) return causal_class::spacelike;
    bool zero = true;
    for (double v : x.c) zero = zero && v == 0.0;
    return zero ? causal_class::spacelike : causal_class::lightlike;
}

lorentz_vector reflection_vector(const lorentz_vector& xi) {
    const int d = xi.dim();
    if (std::abs(enorm(xi) - 1.0) > 1e-9) {
        throw std::invalid_argument("reflection_vector: xi must be Euclidean-unit");
    }
    double g = gamma_form(xi);
    if (!(g < 0)) throw std::invalid_argument("reflection_vector: xi must be spacelike");
    // for unit xi, cos(2 theta) = xi_0^2 - ||xi_spatial||^2 = gamma(xi)
    if (std::abs(g) < 1e-8) {
        throw std::invalid_argument("reflection_vector: xi too close to the light cone");
    }

    double s2 = 0;
    for (int i = 1; i < d; ++i) s2 += xi.c[i] * xi.c[i];
    double s = std::sqrt(s2);
    // theta = arccos(xi_0); sin(theta) = s > 0 since xi is spacelike
    double cos_t = xi.c[0], sin_t = s;
    double tan2t = 2 * sin_t * cos_t / g; // tan(2theta) = sin(2theta)/cos(2theta)

    // in the frame where the spatial part points along e_1:
    //   y' = R(e_0 - tan(2 theta) e_1), R the rotation taking e_0 to xi
    double y0 = cos_t + tan2t * sin_t;
    double y1 = sin_t - tan2t * cos_t;
    // rotate back: the spatial part of y lies along xi_spatial
    lorentz_vector y = lorentz_vector::zero(d);
    y.c[0] = y0;
    for (int i = 1; i < d; ++i) y.c[i] = y1 * xi.c[i] / s;
    return y;
}

lorentz_vector reflect(const lorentz_vector& xi, const lorentz_vector& x) {
    lorentz_vector y = reflection_vector(xi);
    double lam = 2 * edot(x, xi);
    lorentz_vector r = lam * y - x;
    return r;
}

std::vector<std::vector<double>> reflection_matrix(const lorentz_vector& xi) {
    const int d = xi.dim();
    lorentz_vector y = reflection_vector(xi);
    std::vector<std::vector<double>> m(d, std::vector<double>(d, 0.0));
    for (int j = 0; j < d; ++j) {
        lorentz_vector e = lorentz_vector::basis(d, j);
        double lam = 2 * edot(e, xi);
        for (int i = 0; i < d; ++i) m[i][j] = lam * y.c[i] - e.c[i];
    }
    return m;
}

double determinant(std::vector<std::vector<double>> m) {
    const int n = static_cast<int>(m.size());
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        }
        if (m[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < n; ++r) {
            double f = m[r][col] / m[col][col];
            for (int k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

xi_cutoff make_xi_cutoff(const lorentz_vector& xi) {
    xi_cutoff cut;
    cut.xi = xi;
    cut.y_xi = reflection_vector(xi);
    cut.C = std::max(1.0, enorm(cut.y_xi));
    double C = cut.C;
    cut.chi = [](double t) { return smoothstep(2.0 - std::abs(t)); };
    cut.phi = [C](double r) { return smoothstep(C + 2.0 - r); };
    return cut;
}

double xi_cutoff_eval(const xi_cutoff& cut, const lorentz_vector& x) {
    double lam = edot(x, cut.xi);
    lorentz_vector rest = x - lam * cut.y_xi;
    return cut.chi(lam) * cut.phi(enorm(rest));
}

namespace {

// sum over the full tensor grid of g(x) * prod_j e^{-i lambda xi_j x_j},
// streamed one time-slab at a time.
template <typename PointFn>
std::vector<std::complex<double>> grid_transform(PointFn&& g, const lorentz_vector& xi,
                                                 const std::vector<double>& lambdas, int d,
                                                 double R, int n) {
    const auto& rule = gauss_rule<double>::cached(n);
    std::vector<double> xs(n), ws(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = R * rule.nodes[i];
        ws[i] = R * rule.weights[i];
    }
    const int L = static_cast<int>(lambdas.size());
    // per-axis weighted phase tables: ph[axis][lambda][node]
    std::vector<std::vector<std::vector<std::complex<double>>>> ph(
        d, std::vector<std::vector<std::complex<double>>>(L, std::vector<std::complex<double>>(n)));
    for (int ax = 0; ax < d; ++ax) {
        for (int l = 0; l < L; ++l) {
            for (int i = 0; i < n; ++i) {
                double phase = -lambdas[l] * xi.c[ax] * xs[i];
                ph[ax][l][i] = ws[i] * std::complex<double>(std::cos(phase), std::sin(phase));
            }
        }
    }

    std::vector<std::complex<double>> acc(L, 0.0);
    lorentz_vector x = lorentz_vector::zero(d);
    if (d == 2) {
        std::vector<double> row(n);
        for (int i = 0; i < n; ++i) {
            x.c[0] = xs[i];
            for (int j = 0; j < n; ++j) {
                x.c[1] = xs[j];
                row[j] = g(x);
            }
            for (int l = 0; l < L; ++l) {
                std::complex<double> s = 0.0;
                for (int j = 0; j < n; ++j) s += ph[1][l][j] * row[j];
                acc[l] += ph[0][l][i] * s;
            }
        }
        return acc;
    }
    // d == 3
    std::vector<double> slab(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        x.c[0] = xs[i];
        for (int j = 0; j < n; ++j) {
            x.c[1] = xs[j];
            for (int k = 0; k < n; ++k) {
                x.c[2] = xs[k];
                slab[static_cast<std::size_t>(j) * n + k] = g(x);
            }
        }
        for (int l = 0; l < L; ++l) {
            std::complex<double> si = 0.0;
            for (int j = 0; j < n; ++j) {
                std::complex<double> sj = 0.0;
                const double* row = &slab[static_cast<std::size_t>(j) * n];
                for (int k = 0; k < n; ++k) sj += ph[2][l][k] * row[k];
                si += ph[1][l][j] * sj;
            }
            acc[l] += ph[0][l][i] * si;
        }
    }
    return acc;
}

} // namespace

wf_result windowed_fourier(const bump_function& profile, const lorentz_vector& xi,
                           const std::vector<double>& lambdas, int d, wf_options opt) {
    if (d != 2 && d != 3) throw std::invalid_argument("windowed_fourier: d must be 2 or 3");
    if (xi.dim() != d) throw std::invalid_argument("windowed_fourier: xi dimension mismatch");
    if (profile.support_lo() < 0) {
        throw std::invalid_argument("windowed_fourier: profile must be supported in (0,inf)");
    }

    wf_result out;
    out.values.assign(lambdas.size(), 0.0);
    if (profile.atoms().empty()) return out;

    std::function<double(const lorentz_vector&)> psi;
    double R;
    if (opt.plain_cutoff) {
        R = opt.plain_radius;
        psi = [R](const lorentz_vector& x) { return smoothstep(R - enorm(x)); };
    } else {
        xi_cutoff cut = make_xi_cutoff(xi);
        R = cut.support_radius();
        psi = [cut](const lorentz_vector& x) { return xi_cutoff_eval(cut, x); };
    }
    double glo = profile.support_lo();
    double ghi = profile.support_hi();
    auto g = [&](const lorentz_vector& x) -> double {
        double gm = gamma_form(x);
        if (gm <= glo || gm >= ghi) return 0.0;
        double p = psi(x);
        if (p == 0.0) return 0.0;
        double sigma = x.c[0] > 0 ? 1.0 : (x.c[0] < 0 ? -1.0 : 0.0);
        return p * sigma * profile(gm);
    };

    auto coarse = grid_transform(g, xi, lambdas, d, R, opt.order);
    auto fine = grid_transform(g, xi, lambdas, d, R, opt.order_check);
    double err = 0;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        err = std::max(err, std::abs(fine[i] - coarse[i]));
    }
    out.values = std::move(fine);
    out.error_estimate = err;
    out.converged = err <= opt.tol;
    return out;
}

} // namespace hadex
