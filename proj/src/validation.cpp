#include "apm/validation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "apm/errors.hpp"

namespace apm {

namespace {

double distance(const Point& p, const Point& q) { return std::hypot(p.x - q.x, p.y - q.y); }

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> splitFields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

bool parseNumber(const std::string& text, double& value) {
    if (text.empty()) return false;
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (*begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    return ec == std::errc() && ptr == end;
}

}  // namespace

Curve::Curve(std::vector<Point> points, std::string label)
    : points_(std::move(points)), label_(std::move(label)) {
    if (points_.size() < 2) throw DomainError("curve '" + label_ + "' needs at least two points");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
            throw DomainError("curve '" + label_ + "' has a non-finite value");
        }
        if (i > 0 && !(points_[i].x > points_[i - 1].x)) {
            throw DomainError("curve '" + label_ + "' x values must be strictly increasing");
        }
    }
}

std::vector<double> Curve::xs() const {
    std::vector<double> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p.x);
    return out;
}

std::vector<double> Curve::ys() const {
    std::vector<double> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p.y);
    return out;
}

double discreteFrechet(const Curve& a, const Curve& b) {
    const auto& p = a.points();
    const auto& q = b.points();
    // coupling[j] holds the DP value for the current row i.
    std::vector<double> coupling(q.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        double diagonal = 0.0;  // coupling value at (i−1, j−1)
        for (std::size_t j = 0; j < q.size(); ++j) {
            const double d = distance(p[i], q[j]);
            const double up = coupling[j];
            double best;
            if (i == 0 && j == 0) {
                best = d;
            } else if (i == 0) {
                best = std::max(coupling[j - 1], d);
            } else if (j == 0) {
                best = std::max(up, d);
            } else {
                best = std::max(std::min({up, coupling[j - 1], diagonal}), d);
            }
            diagonal = up;
            coupling[j] = best;
        }
    }
    return coupling.back();
}

double normalizedFrechet(const Curve& model, const Curve& reference) {
    const auto& ref = reference.points();
    const auto [xmin, xmax] = std::minmax_element(ref.begin(), ref.end(),
                                                  [](auto& l, auto& r) { return l.x < r.x; });
    const auto [ymin, ymax] = std::minmax_element(ref.begin(), ref.end(),
                                                  [](auto& l, auto& r) { return l.y < r.y; });
    const double x0 = xmin->x, xs = xmax->x - xmin->x;
    const double y0 = ymin->y, ys = ymax->y - ymin->y;
    if (!(xs > 0.0) || !(ys > 0.0)) {
        throw DomainError("reference curve '" + reference.label() + "' has a zero x or y range");
    }
    auto rescale = [&](const Curve& c) {
        std::vector<Point> pts;
        pts.reserve(c.size());
        for (const auto& p : c.points()) pts.push_back({(p.x - x0) / xs, (p.y - y0) / ys});
        return Curve(std::move(pts), c.label());
    };
    return discreteFrechet(rescale(model), rescale(reference));
}

double rSquared(std::span<const ValuePair> pairs) {
    if (pairs.size() < 2) throw DomainError("R-squared needs at least two pairs");
    double mean = 0.0;
    for (const auto& [reference, model] : pairs) mean += reference;
    mean /= static_cast<double>(pairs.size());
    double ssRes = 0.0;
    double ssTot = 0.0;
    for (const auto& [reference, model] : pairs) {
        ssRes += (reference - model) * (reference - model);
        ssTot += (reference - mean) * (reference - mean);
    }
    if (!(ssTot > 0.0)) throw DomainError("R-squared undefined: reference has zero variance");
    return 1.0 - ssRes / ssTot;
}

double quantile(std::span<const double> sample, double p) {
    if (sample.empty()) throw DomainError("quantile of an empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile level must lie in [0, 1]");
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::vector<ValuePair> qqPairs(std::span<const double> a, std::span<const double> b, int k) {
    if (a.empty() || b.empty()) throw DomainError("Q-Q pairs need non-empty samples");
    if (k < 2) throw DomainError("Q-Q pairs need k >= 2");
    std::vector<ValuePair> pairs;
    pairs.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double p = static_cast<double>(i) / (k - 1);
        pairs.emplace_back(quantile(a, p), quantile(b, p));
    }
    return pairs;
}

Curve resample(const Curve& curve, std::span<const double> xs) {
    const auto& pts = curve.points();
    std::vector<Point> out;
    out.reserve(xs.size());
    for (double x : xs) {
        if (x < pts.front().x || x > pts.back().x) {
            throw DomainError("resample point outside curve '" + curve.label() + "' x range");
        }
        auto upper = std::lower_bound(pts.begin(), pts.end(), x,
                                      [](const Point& p, double v) { return p.x < v; });
        if (upper->x == x) {
            out.push_back(*upper);
            continue;
        }
        const auto lower = upper - 1;
        const double t = (x - lower->x) / (upper->x - lower->x);
        out.push_back({x, lower->y + t * (upper->y - lower->y)});
    }
    return Curve(std::move(out), curve.label());
}

AgreementReport compareCurves(const Curve& model, const Curve& reference, int qqCount,
                              bool resampleModel) {
    AgreementReport report;
    report.modelPoints = model.size();
    report.referencePoints = reference.size();
    report.resampled = resampleModel;

    auto compare = [&](const Curve& m, const Curve& r) {
        report.frechetRaw = discreteFrechet(m, r);
        report.frechetNormalized = normalizedFrechet(m, r);
        if (m.size() != r.size()) {
            throw DomainError("R-squared pairs points by index; curves have " +
                              std::to_string(m.size()) + " and " + std::to_string(r.size()) +
                              " points (use resampling)");
        }
        std::vector<ValuePair> pairs;
        for (std::size_t i = 0; i < m.size(); ++i) {
            pairs.emplace_back(r.points()[i].y, m.points()[i].y);
        }
        report.rSquared = rSquared(pairs);
        if (qqCount > 0) report.qqPairs = qqPairs(r.ys(), m.ys(), qqCount);
    };

    if (!resampleModel) {
        compare(model, reference);
        return report;
    }
    std::vector<Point> overlap;
    for (const auto& p : reference.points()) {
        if (p.x >= model.points().front().x && p.x <= model.points().back().x) overlap.push_back(p);
    }
    if (overlap.size() < 2) {
        throw DomainError("model and reference curves overlap in fewer than two reference points");
    }
    const Curve restricted(std::move(overlap), reference.label());
    compare(resample(model, restricted.xs()), restricted);
    return report;
}

Curve readCurveCsv(std::istream& in, const std::string& label, const std::string& xColumn,
                   const std::string& yColumn) {
    std::string line;
    std::vector<std::string> header;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!trim(line).empty()) {
            header = splitFields(line);
            break;
        }
    }
    if (header.empty()) throw DataError(label + ": empty CSV");
    const auto column = [&](const std::string& name) -> std::size_t {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) {
            throw DataError(label + ": header row must name column '" + name + "'");
        }
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t xi = column(xColumn);
    const std::size_t yi = column(yColumn);

    std::vector<Point> points;
    while (std::getline(in, line)) {
        ++lineNo;
        if (trim(line).empty()) continue;
        const auto fields = splitFields(line);
        if (fields.size() != header.size()) {
            throw DataError(label + ":" + std::to_string(lineNo) + ": expected " +
                            std::to_string(header.size()) + " fields");
        }
        Point p{};
        if (!parseNumber(fields[xi], p.x) || !parseNumber(fields[yi], p.y)) {
            throw DataError(label + ":" + std::to_string(lineNo) + ": non-numeric value");
        }
        points.push_back(p);
    }
    try {
        return Curve(std::move(points), label);
    } catch (const DomainError& e) {
        throw DataError(e.what());
    }
}

Curve readCurveCsvFile(const std::string& path, const std::string& xColumn,
                       const std::string& yColumn) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return readCurveCsv(in, path, xColumn, yColumn);
}

}  // namespace apm
