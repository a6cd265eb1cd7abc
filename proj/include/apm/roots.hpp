#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "apm/errors.hpp"

namespace apm::roots {

inline constexpr int kMaxIterations = 200;

// Safeguarded Newton iteration inside a sign-changing bracket. `fdf(x)` returns
// {f(x), f'(x)}. A Newton step that leaves the bracket, or fails to halve the
// residual interval, is replaced by bisection, so convergence is guaranteed for
// any continuous f with a sign change on [lo, hi].
template <class FunctionWithDerivative>
double newtonBisect(FunctionWithDerivative&& fdf, double lo, double hi, double xtol = 1e-15) {
    auto [flo, dlo] = fdf(lo);
    if (flo == 0.0) return lo;
    auto [fhi, dhi] = fdf(hi);
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw UnbracketedRootError("root not bracketed in [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "]");
    }
    // Orient so that f(neg) < 0 < f(pos).
    double neg = flo < 0.0 ? lo : hi;
    double pos = flo < 0.0 ? hi : lo;

    double x = 0.5 * (lo + hi);
    double dxOld = std::abs(hi - lo);
    double dx = dxOld;
    auto [f, df] = fdf(x);
    for (int it = 0; it < kMaxIterations; ++it) {
        const bool newtonLeaves = ((x - pos) * df - f) * ((x - neg) * df - f) > 0.0;
        const bool newtonSlow = std::abs(2.0 * f) > std::abs(dxOld * df);
        if (newtonLeaves || newtonSlow || df == 0.0) {
            dxOld = dx;
            dx = 0.5 * (pos - neg);
            x = neg + dx;
        } else {
            dxOld = dx;
            dx = f / df;
            x -= dx;
        }
        if (std::abs(dx) <= xtol * (1.0 + std::abs(x))) return x;
        std::tie(f, df) = fdf(x);
        if (f == 0.0) return x;
        if (f < 0.0) {
            neg = x;
        } else {
            pos = x;
        }
        if (std::abs(pos - neg) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
            return x;
        }
    }
    return x;
}

// Brent's method (inverse quadratic interpolation with bisection fallback).
template <class Function>
double brent(Function&& f, double a, double b, double xtol = 1e-15) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        throw UnbracketedRootError("root not bracketed in [" + std::to_string(a) + ", " +
                                   std::to_string(b) + "]");
    }
    double c = a, fc = fa, d = b - a, e = d;
    for (int it = 0; it < kMaxIterations; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return b;
        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q; else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
    }
    return b;
}

}  // namespace apm::roots
