#include "apm/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "apm/elliptic.hpp"
#include "apm/errors.hpp"
#include "apm/roots.hpp"

namespace apm {

namespace {

void requirePositive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError(std::string(what) + " must be positive and finite");
    }
}

bool nearlyEqual(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace

void SpaGeometry::validate() const {
    requirePositive(wallThickness, "t_w");
    requirePositive(chamberLength, "a_ch");
    requirePositive(chamberWidth, "b_ch");
    requirePositive(chamberHeight, "h_ch");
    requirePositive(junctionHeight, "h_jz");
    requirePositive(hZoneLength, "a_hz");
    requirePositive(hZoneWidth, "b_hz");
}

void SarcomereGeometry::validate() const {
    requirePositive(aBand, "A-band");
    requirePositive(iBand, "I-band");
    requirePositive(actinArc, "actin arc");
    requirePositive(myosinHeight, "myosin height");
    if (sarcomereHeight < 0.0) throw DomainError("sarcomere height must be non-negative");
    if (junctionsPerMyosin < 1) throw DomainError("junctionsPerMyosin must be >= 1");
}

void MyofibrilSpec::validate() const {
    if (n < 1) throw DomainError("sarcomere count n must be >= 1");
    sarcomere.validate();
    spa.validate();
    if (!(restChord(*this) > 0.0)) {
        throw DomainError("myosin height must exceed 2*t_w + h_ch");
    }
}

std::vector<std::string> MyofibrilSpec::designWarnings() const {
    std::vector<std::string> notes;
    const auto design = designFromABand(sarcomere.aBand);
    auto fmt = [](double v) {
        std::ostringstream os;
        os << v;
        return os.str();
    };
    if (!nearlyEqual(sarcomere.iBand, design.iBand, 1e-9)) {
        notes.push_back("I-band " + fmt(sarcomere.iBand) + " mm differs from 2A'/3 = " +
                        fmt(design.iBand) + " mm");
    }
    if (!nearlyEqual(sarcomere.actinArc, design.actinArc, 1e-9)) {
        notes.push_back("actin arc " + fmt(sarcomere.actinArc) + " mm differs from pi*A'/3 = " +
                        fmt(design.actinArc) + " mm");
    }
    const auto bounds = myosinHeightBounds(sarcomere.aBand, spa.wallThickness, spa.chamberHeight);
    const double slack = 1e-9 * bounds.high;
    if (sarcomere.myosinHeight < bounds.low - slack || sarcomere.myosinHeight > bounds.high + slack) {
        notes.push_back("myosin height " + fmt(sarcomere.myosinHeight) + " mm outside [" +
                        fmt(bounds.low) + ", " + fmt(bounds.high) + "] mm");
    }
    return notes;
}

double EllipseHalf::eccentricity() const {
    const double major = std::max(r1, r2);
    const double minor = std::min(r1, r2);
    if (!(minor > 0.0)) throw DomainError("ellipse semi-axes must be positive");
    return std::sqrt(1.0 - (minor * minor) / (major * major));
}

std::string_view toString(LengthRatioStatus status) {
    switch (status) {
        case LengthRatioStatus::valid: return "valid";
        case LengthRatioStatus::overContracted: return "over-contracted";
        case LengthRatioStatus::overStretched: return "over-stretched";
    }
    return "unknown";
}

double restingLength(const MyofibrilSpec& spec) {
    spec.validate();
    return spec.n * (spec.sarcomere.aBand + spec.sarcomere.iBand);
}

LengthRatioStatus checkLengthRatio(double current, double resting) {
    if (!(resting > 0.0)) throw DomainError("resting length must be positive");
    const double ratio = current / resting;
    if (ratio < kMinLengthRatio) return LengthRatioStatus::overContracted;
    if (ratio > kMaxLengthRatio) return LengthRatioStatus::overStretched;
    return LengthRatioStatus::valid;
}

SarcomereDesign designFromABand(double aBand) {
    requirePositive(aBand, "A-band");
    return {aBand, 2.0 * aBand / 3.0, std::numbers::pi * aBand / 3.0, aBand / 3.0};
}

SarcomereGeometry completeSarcomere(const SarcomereDesign& design, const SpaGeometry& spa,
                                    int junctionsPerMyosin) {
    spa.validate();
    SarcomereGeometry g;
    g.aBand = design.aBand;
    g.iBand = design.iBand;
    g.actinArc = design.actinArc;
    g.myosinHeight = 2.0 * design.restRadius + 2.0 * spa.wallThickness + spa.chamberHeight;
    g.junctionsPerMyosin = junctionsPerMyosin;
    return g;
}

HeightBounds myosinHeightBounds(double aBand, double wallThickness, double chamberHeight) {
    requirePositive(aBand, "A-band");
    requirePositive(wallThickness, "t_w");
    requirePositive(chamberHeight, "h_ch");
    const double walls = 2.0 * wallThickness + chamberHeight;
    return {2.0 * aBand / 3.0 + walls, std::numbers::pi * aBand / 3.0 + walls};
}

double semiEllipseArcLength(double r1, double r2) {
    if (!(r2 > 0.0)) throw DomainError("minor semi-axis must be positive");
    if (!(r1 >= r2)) throw DomainError("semiEllipseArcLength requires r1 >= r2");
    return halfEllipsePerimeter(r1, r2);
}

double solveMajorAxis(double arcLength, double minorDiameter) {
    requirePositive(arcLength, "arc length");
    requirePositive(minorDiameter, "minor diameter");
    if (!(arcLength > minorDiameter)) {
        throw DomainError("actin arc " + std::to_string(arcLength) +
                          " mm is not longer than its chord " + std::to_string(minorDiameter) +
                          " mm");
    }
    const double r2 = 0.5 * minorDiameter;
    const double semicircle = std::numbers::pi * r2;
    if (std::abs(arcLength - semicircle) <= 4.0 * std::numeric_limits<double>::epsilon() * arcLength) {
        return r2;
    }
    // Half perimeter rises monotonically from 2·r2 (r1 = 0) and exceeds the arc at r1 = arc/2.
    return roots::brent(
        [&](double r1) { return halfEllipsePerimeter(r1, r2) - arcLength; }, 0.0,
        0.5 * arcLength, 1e-13 * arcLength);
}

double restChord(const MyofibrilSpec& spec) {
    return spec.sarcomere.myosinHeight - 2.0 * spec.spa.wallThickness - spec.spa.chamberHeight;
}

double myosinHeightChange(const MyofibrilSpec& spec, double lambdaJz) {
    if (!(lambdaJz >= 1.0)) throw DomainError("junction stretch must be >= 1");
    return spec.sarcomere.junctionsPerMyosin * (lambdaJz - 1.0) * spec.spa.junctionHeight;
}

double actinSemiAxis(const MyofibrilSpec& spec, double deltaHm) {
    spec.validate();
    if (!(deltaHm >= 0.0)) throw DomainError("myosin height change must be non-negative");
    return solveMajorAxis(spec.sarcomere.actinArc, restChord(spec) + deltaHm);
}

double myofibrilLength(const MyofibrilSpec& spec, double deltaHm) {
    const double r1 = actinSemiAxis(spec, deltaHm);
    const auto& s = spec.sarcomere;
    // At rest a design-rule sarcomere spans exactly A' + I'.
    if (deltaHm == 0.0 && r1 == 0.5 * restChord(spec) && nearlyEqual(2.0 * r1, s.iBand, 1e-12)) {
        return restingLength(spec);
    }
    return spec.n * (s.aBand + 2.0 * r1);
}

double contractionAngle(const SpaGeometry& spa, double lambdaJz, double actinArc) {
    requirePositive(actinArc, "actin arc");
    if (!(lambdaJz >= 1.0)) throw DomainError("junction stretch must be >= 1");
    const double span =
        2.0 * spa.wallThickness + spa.chamberHeight + 2.0 * lambdaJz * spa.junctionHeight;
    const double argument = span / actinArc;
    if (!(argument > 0.0 && argument < 1.0)) {
        throw DomainError("contraction angle undefined: (2t_w + h_ch + 2*lambda*h_jz)/l = " +
                          std::to_string(argument) + " is outside (0, 1)");
    }
    return std::acos(argument);
}

}  // namespace apm
