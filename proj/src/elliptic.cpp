#include "apm/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "apm/errors.hpp"

namespace apm {

namespace {

// AGM iteration from (a, b) accumulating Σ 2^(n−1)·c_n² with c_0² supplied.
// Returns {agm, sum}.
struct AgmResult {
    double mean;
    double weightedSum;
};

AgmResult agm(double a, double b, double c0Squared) {
    double sum = 0.5 * c0Squared;
    double weight = 0.5;
    double c = std::sqrt(c0Squared);
    for (int i = 0; i < 64; ++i) {
        const double an = 0.5 * (a + b);
        // c_{n+1} = c_n²/(4a_{n+1}) instead of (a_n − b_n)/2, which cancels badly
        c = c * c / (4.0 * an);
        weight *= 2.0;
        sum += weight * c * c;
        b = std::sqrt(a * b);
        a = an;
        if (c <= 1e-17 * a) break;
    }
    return {a, sum};
}

}  // namespace

double completeEllipticE(double k) {
    if (!(std::abs(k) <= 1.0)) throw DomainError("elliptic modulus must satisfy |k| <= 1");
    const double k2 = k * k;
    if (k2 == 1.0) return 1.0;
    const auto [mean, sum] = agm(1.0, std::sqrt(1.0 - k2), k2);
    // K = π / (2·AGM); E = K·(1 − Σ 2^(n−1) c_n²)
    return std::numbers::pi / (2.0 * mean) * (1.0 - sum);
}

double halfEllipsePerimeter(double a, double b) {
    if (!(a >= 0.0 && b >= 0.0)) throw DomainError("ellipse semi-axes must be non-negative");
    const double major = std::max(a, b);
    const double minor = std::min(a, b);
    if (major == 0.0) return 0.0;
    if (minor == 0.0) return 2.0 * major;
    if (minor == major) return std::numbers::pi * major;
    // Perimeter = 2π/AGM(a,b)·(a² − Σ 2^(n−1) c_n²), c_0² = a² − b².
    const auto [mean, sum] = agm(major, minor, major * major - minor * minor);
    return std::numbers::pi / mean * (major * major - sum);
}

}  // namespace apm
