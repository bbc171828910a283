// Test-only reference implementations. Nothing here shares code with the
// library: Bessel values come from a 50-digit power series, zeros from plain
// bisection on it, integrals from composite Simpson, the ODE from an adaptive
// Dormand-Prince integrator.
#pragma once

#include "dressed/core.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_50;

// J_n(x) = sum_m (-1)^m (x/2)^(2m+n) / (m! (m+n)!)
inline double bessel_series(int n, double x) {
    const big h = big(x) / 2;
    big term = 1;
    for (int i = 1; i <= n; ++i) term *= h / i;
    big sum = term;
    const big h2 = h * h;
    for (int m = 1; m < 400; ++m) {
        term *= -h2 / (big(m) * big(m + n));
        sum += term;
        if (abs(term) < big("1e-45") && m > x) break;
    }
    return static_cast<double>(sum);
}

inline double bisect(const std::function<double(double)>& f, double a, double b, double tol = 1e-14) {
    double fa = f(a);
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

// k-th zero of J_0 by scanning for a sign change, then bisection.
inline double j0_zero(int k) {
    auto f = [](double x) { return bessel_series(0, x); };
    int found = 0;
    const double h = 0.05;
    for (double x = h; x < 100; x += h) {
        if ((f(x) < 0) != (f(x + h) < 0) && ++found == k) return bisect(f, x, x + h);
    }
    return NAN;
}

template <class F>
auto simpson(F f, double a, double b, int n = 2000) {
    using R = decltype(f(a));
    const double h = (b - a) / n;
    R s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * (h / 3.0);
}

template <class F>
double central_diff(F f, double x, double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2 * h);
}

// U(tau, 0) for H = diag(-delta/2, delta/2) - rabi cos(tau) sigma_x by adaptive
// Dormand-Prince on the 4 complex entries.
inline dressed::ComplexMatrix2 ode_propagator(double delta, double rabi, double tau, double tol = 1e-13) {
    using dressed::cplx;
    using State = std::array<cplx, 4>;
    namespace ode = boost::numeric::odeint;
    State u{1.0, 0.0, 0.0, 1.0};
    auto rhs = [&](const State& s, State& ds, double t) {
        const double d = delta / 2, o = -rabi * std::cos(t);
        const cplx mi(0, -1);
        ds[0] = mi * (-d * s[0] + o * s[2]);
        ds[1] = mi * (-d * s[1] + o * s[3]);
        ds[2] = mi * (o * s[0] + d * s[2]);
        ds[3] = mi * (o * s[1] + d * s[3]);
    };
    if (tau > 0) {
        ode::integrate_adaptive(ode::make_controlled(tol, tol, ode::runge_kutta_dopri5<State, double, State, double,
                                                                                        ode::array_algebra>()),
                                rhs, u, 0.0, tau, 1e-3);
    }
    return {u[0], u[1], u[2], u[3]};
}

}  // namespace oracle
