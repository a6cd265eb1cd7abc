#pragma once

namespace apm {

/// Complete elliptic integral of the second kind E(k) = ∫₀^{π/2} sqrt(1 − k² sin²θ) dθ,
/// evaluated with the arithmetic-geometric mean. Requires 0 ≤ |k| ≤ 1.
double completeEllipticE(double k);

/// Half the perimeter of an ellipse with semi-axes a and b (either order).
/// Equal to 2·max(a,b)·E(e). Degenerates to 2·max(a,b) when min(a,b) = 0.
double halfEllipsePerimeter(double a, double b);

}  // namespace apm
