#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "apm/material.hpp"

namespace apm {

/// Chamber and junction dimensions of one soft pneumatic actuator, all in mm.
struct SpaGeometry {
    double wallThickness;    // t_w
    double chamberLength;    // a_ch
    double chamberWidth;     // b_ch
    double chamberHeight;    // h_ch
    double junctionHeight;   // h_jz
    double hZoneLength;      // a_hz
    double hZoneWidth;       // b_hz

    /// Throws DomainError unless every dimension is positive and finite.
    void validate() const;
    double wallRatio() const { return wallThickness / chamberHeight; }
    double hZoneArea() const { return hZoneLength * hZoneWidth; }
};

/// Rest dimensions of a sarcomere that follow from the A-band alone.
struct SarcomereDesign {
    double aBand;
    double iBand;       // (2/3)·A'
    double actinArc;    // (π/3)·A'
    double restRadius;  // r1' = r2' = A'/3
};

struct SarcomereGeometry {
    double aBand;         // A', mm
    double iBand;         // I', mm
    double actinArc;      // l, mm
    double myosinHeight;  // h_m' = 2r2' + 2t_w + h_ch, mm
    double sarcomereHeight = 0.0;  // h_s, descriptive only
    int junctionsPerMyosin = 2;

    void validate() const;
};

struct MyofibrilSpec {
    int n;
    SarcomereGeometry sarcomere;
    SpaGeometry spa;
    YeohMaterial material;

    /// Throws DomainError on hard invariant violations (n < 1, non-positive sizes).
    void validate() const;
    /// Human-readable notes for designs that depart from the biological design
    /// rules (I' = 2A'/3, l = πA'/3, myosin height bounds). Never throws.
    std::vector<std::string> designWarnings() const;
};

/// Half of an actin ellipse: r1 along the myofibril axis, r2 across it.
struct EllipseHalf {
    double r1;
    double r2;

    /// Computed from the longer axis; lies in [0, 1).
    double eccentricity() const;
};

enum class LengthRatioStatus { valid, overContracted, overStretched };

std::string_view toString(LengthRatioStatus status);

inline constexpr double kMinLengthRatio = 0.6;
inline constexpr double kMaxLengthRatio = 1.7;

/// L' = n(A' + I').
double restingLength(const MyofibrilSpec& spec);

/// Classifies L/L' against [0.6, 1.7].
LengthRatioStatus checkLengthRatio(double current, double resting);

/// I' = 2A'/3 and the rest semicircle of arc πA'/3.
SarcomereDesign designFromABand(double aBand);

/// Completes a design for a given actuator: the myosin height is set to its
/// lower bound 2r2' + 2t_w + h_ch.
SarcomereGeometry completeSarcomere(const SarcomereDesign& design, const SpaGeometry& spa,
                                    int junctionsPerMyosin = 2);

struct HeightBounds {
    double low;
    double high;
};

/// [(2/3)A' + 2t_w + h_ch, (π/3)A' + 2t_w + h_ch]
HeightBounds myosinHeightBounds(double aBand, double wallThickness, double chamberHeight);

/// Arc of a half ellipse, r1·∫₀^π sqrt(1 − e² sin²θ) dθ = 2·r1·E(e). Requires r1 ≥ r2 > 0.
double semiEllipseArcLength(double r1, double r2);

/// Axial semi-axis r1 of the half ellipse with the given arc length whose chord
/// (the axis across the myofibril) is `minorDiameter`. When the arc is shorter
/// than the semicircle on that chord the ellipse is oriented the other way and
/// the returned r1 is smaller than minorDiameter/2. Throws DomainError unless
/// minorDiameter < arcLength.
double solveMajorAxis(double arcLength, double minorDiameter);

/// Chord 2r2' spanned by the actin at rest: h_m' − 2t_w − h_ch.
double restChord(const MyofibrilSpec& spec);

/// Δh_m = junctionsPerMyosin·(λ_jz − 1)·h_jz.
double myosinHeightChange(const MyofibrilSpec& spec, double lambdaJz);

/// Axial semi-axis after the myosin height grew by deltaHm.
double actinSemiAxis(const MyofibrilSpec& spec, double deltaHm);

/// L_mf = n(A' + 2r1) with r1 solved from the actin arc and chord 2r2' + Δh_m.
double myofibrilLength(const MyofibrilSpec& spec, double deltaHm);

/// θ = arccos((2t_w + h_ch + 2λ_jz·h_jz)/l), in radians.
double contractionAngle(const SpaGeometry& spa, double lambdaJz, double actinArc);

}  // namespace apm
