#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace apm {

struct Point {
    double x;
    double y;
};

/// Sampled curve: at least two finite points with strictly increasing x.
class Curve {
public:
    /// Throws DomainError when the invariants do not hold.
    explicit Curve(std::vector<Point> points, std::string label = {});

    const std::vector<Point>& points() const noexcept { return points_; }
    const std::string& label() const noexcept { return label_; }
    std::size_t size() const noexcept { return points_.size(); }

    std::vector<double> xs() const;
    std::vector<double> ys() const;

private:
    std::vector<Point> points_;
    std::string label_;
};

using ValuePair = std::pair<double, double>;

/// Discrete Fréchet (coupling) distance with Euclidean point distance, computed
/// by dynamic programming over the m×n coupling lattice.
double discreteFrechet(const Curve& a, const Curve& b);

/// Both curves rescaled so that the reference spans [0, 1] on each axis, then
/// compared with discreteFrechet. Result is a fraction (0.1 = 10 %).
double normalizedFrechet(const Curve& model, const Curve& reference);

/// Coefficient of determination 1 − SS_res/SS_tot for (reference, model) pairs.
double rSquared(std::span<const ValuePair> pairs);

/// Linear-interpolation quantile (inclusive endpoints) of an unsorted sample.
double quantile(std::span<const double> sample, double p);

/// k pairs (Q_a(p), Q_b(p)) at p = i/(k−1).
std::vector<ValuePair> qqPairs(std::span<const double> a, std::span<const double> b, int k);

/// Linear interpolation of `curve` at each x; every x must lie inside the curve's x range.
Curve resample(const Curve& curve, std::span<const double> xs);

struct AgreementReport {
    double frechetNormalized = 0.0;  // fraction
    double frechetRaw = 0.0;
    double rSquared = 0.0;
    std::size_t modelPoints = 0;
    std::size_t referencePoints = 0;
    bool resampled = false;
    std::vector<ValuePair> qqPairs;  // (reference, model)
};

/// Compares a model curve to a reference. With `resampleModel` the model is
/// linearly interpolated onto the reference x values inside its own x range;
/// otherwise R² pairs the curves point by point and needs equal lengths.
/// `qqCount` of zero skips the Q-Q pairs.
AgreementReport compareCurves(const Curve& model, const Curve& reference, int qqCount,
                              bool resampleModel);

/// Two-column CSV with a header naming the columns; `xColumn`/`yColumn` select
/// which ones are used. Throws DataError on malformed input.
Curve readCurveCsv(std::istream& in, const std::string& label, const std::string& xColumn = "x",
                   const std::string& yColumn = "y");

Curve readCurveCsvFile(const std::string& path, const std::string& xColumn = "x",
                       const std::string& yColumn = "y");

}  // namespace apm
