#pragma once

// Reference computations used only by the tests. They take deliberately
// different routes from the library: quadrature instead of the AGM, plain
// bisection instead of safeguarded Newton, exhaustive enumeration instead of
// dynamic programming.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

namespace oracle {

// Adaptive Simpson quadrature of f over [a, b].
inline double simpson(const std::function<double(double)>& f, double a, double b, double tol,
                      int depth = 50) {
    std::function<double(double, double, double, double, double, double, double, int)> step =
        [&](double lo, double hi, double flo, double fmid, double fhi, double whole, double eps,
            int level) -> double {
        const double mid = 0.5 * (lo + hi);
        const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
        const double flm = f(lm), frm = f(rm);
        const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
        const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
        if (level <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
            return left + right + (left + right - whole) / 15.0;
        }
        return step(lo, mid, flo, flm, fmid, left, 0.5 * eps, level - 1) +
               step(mid, hi, fmid, frm, fhi, right, 0.5 * eps, level - 1);
    };
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return step(a, b, fa, fm, fb, whole, tol, depth);
}

// Arc of a half ellipse by integrating the parametric speed over [0, π].
inline double halfEllipseArcQuadrature(double r1, double r2) {
    return simpson([&](double t) { return std::hypot(r1 * std::sin(t), r2 * std::cos(t)); }, 0.0,
                   std::numbers::pi, 1e-13);
}

// Yeoh energy from the principal stretches (λ, 1/λ, 1).
inline double yeohEnergy(const std::array<double, 3>& c, double lambda) {
    const double i1 = lambda * lambda + 1.0 / (lambda * lambda) + 1.0;
    double w = 0.0;
    for (int i = 0; i < 3; ++i) w += c[i] * std::pow(i1 - 3.0, i + 1);
    return w;
}

// Central finite difference.
inline double derivative(const std::function<double(double)>& f, double x, double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Plain bisection of an increasing function.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct Pt {
    double x, y;
};

// Minimum over every monotone coupling of the maximum paired distance,
// enumerated explicitly path by path.
inline double frechetBruteForce(const std::vector<Pt>& a, const std::vector<Pt>& b) {
    double best = std::numeric_limits<double>::infinity();
    std::function<void(std::size_t, std::size_t, double)> walk = [&](std::size_t i, std::size_t j,
                                                                     double worst) {
        worst = std::max(worst, std::hypot(a[i].x - b[j].x, a[i].y - b[j].y));
        if (i + 1 == a.size() && j + 1 == b.size()) {
            best = std::min(best, worst);
            return;
        }
        if (i + 1 < a.size()) walk(i + 1, j, worst);
        if (j + 1 < b.size()) walk(i, j + 1, worst);
        if (i + 1 < a.size() && j + 1 < b.size()) walk(i + 1, j + 1, worst);
    };
    walk(0, 0, 0.0);
    return best;
}

}  // namespace oracle
