#pragma once

#include "hadex/bump.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace hadex {

// Point/covector in d-dimensional Minkowski space, signature
// eta(x,y) = -x_0 y_0 + sum_{i>=1} x_i y_i (index 0 is time).
struct lorentz_vector {
    std::vector<double> c;

    lorentz_vector() = default;
    explicit lorentz_vector(std::vector<double> comps);
    static lorentz_vector zero(int d);
    static lorentz_vector basis(int d, int i);

    int dim() const { return static_cast<int>(c.size()); }
    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }

    friend lorentz_vector operator+(const lorentz_vector& a, const lorentz_vector& b);
    friend lorentz_vector operator-(const lorentz_vector& a, const lorentz_vector& b);
    friend lorentz_vector operator*(double s, const lorentz_vector& a);
};

// Minkowski bilinear form and gamma(x) = -eta(x,x) = x_0^2 - sum x_i^2.
double eta(const lorentz_vector& x, const lorentz_vector& y);
double gamma_form(const lorentz_vector& x);

// Euclidean helpers (the reflection construction lives in Euclidean terms).
double edot(const lorentz_vector& x, const lorentz_vector& y);
double enorm(const lorentz_vector& x);

enum class causal_class { timelike, spacelike, lightlike };

// timelike iff gamma > 0, lightlike iff gamma = 0 and x != 0; the zero
// vector counts as spacelike.
causal_class classify(const lorentz_vector& x);

// The reflection axis y_xi for a spacelike Euclidean-unit xi:
// <y_xi, xi> = 1 (Euclidean), gamma(lambda y_xi + v) = gamma(lambda y_xi - v)
// for v perp xi, and gamma(y_xi) = 1/cos(2 theta) with theta the angle
// between xi and e_0. Rejects non-spacelike, non-unit, or near-degenerate
// xi (|cos 2theta| < 1e-8, where y_xi blows up).
lorentz_vector reflection_vector(const lorentz_vector& xi);

// O_xi(x) = 2<x,xi> y_xi - x. Involution, Lorentz transformation,
// |det| = 1, flips the time sign of causal vectors.
lorentz_vector reflect(const lorentz_vector& xi, const lorentz_vector& x);

// matrix of O_xi (columns O_xi(e_i)), for determinant checks
std::vector<std::vector<double>> reflection_matrix(const lorentz_vector& xi);

double determinant(std::vector<std::vector<double>> m);

// xi-adapted cutoff psi_xi(x) = chi(<x,xi>) phi(||x - <x,xi> y_xi||):
// identically 1 on the unit ball, supported in the ball of radius 3C+2,
// invariant under O_xi.
struct xi_cutoff {
    lorentz_vector xi, y_xi;
    double C; // >= ||y_xi||
    std::function<double(double)> chi;  // 1 on [-1,1], 0 outside [-2,2]
    std::function<double(double)> phi;  // 1 on [0,C+1], 0 beyond C+2

    double support_radius() const { return 3 * C + 2; }
};

xi_cutoff make_xi_cutoff(const lorentz_vector& xi);

double xi_cutoff_eval(const xi_cutoff& cut, const lorentz_vector& x);

// Windowed Fourier transform int e^{-i lambda <x,xi>} psi(x) sigma(x)
// f(gamma(x)) dx for each lambda; psi is the xi-adapted cutoff, or a plain
// radial plateau when `plain_cutoff` is set (the timelike control, where no
// reflection exists). sigma(x) = sign(x_0).
struct wf_options {
    int order = 200;       // Gauss points per axis
    int order_check = 256; // second resolution for the error estimate
    double tol = 1e-10;
    bool plain_cutoff = false;
    double plain_radius = 8.0;
};

struct wf_result {
    std::vector<std::complex<double>> values;
    double error_estimate = 0;
    bool converged = true;
};

wf_result windowed_fourier(const bump_function& profile, const lorentz_vector& xi,
                           const std::vector<double>& lambdas, int d, wf_options opt = {});

} // namespace hadex
