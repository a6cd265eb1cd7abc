#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "apm/actuation.hpp"
#include "apm/geometry.hpp"
#include "apm/material.hpp"

namespace apm {

enum class OutputFormat { csv, json };

OutputFormat parseOutputFormat(std::string_view text);

inline constexpr double kDefaultAssumedChamberHeight = 10.0;

/// Sarcomere section of a run config. Only the A-band is required; missing
/// values follow the design rules (I' = 2A'/3, l = πA'/3, h_m at its lower bound).
struct SarcomereInput {
    double aBand = 0.0;
    std::optional<double> iBand;
    std::optional<double> actinArc;
    std::optional<double> myosinHeight;
    double sarcomereHeight = 0.0;
    int junctionsPerMyosin = 2;
};

/// Parsed `key = value` config with [material], [spa], [sarcomere], [sweep] and
/// [output] sections. Lengths in mm, pressures and coefficients in MPa.
struct RunConfig {
    YeohMaterial material;
    SpaGeometry spa;
    /// Set when [spa] gives t_w_over_h_ch instead of absolute t_w / h_ch.
    bool ratioOnly = false;
    double assumedChamberHeight = kDefaultAssumedChamberHeight;
    SarcomereInput sarcomere;
    int n = 1;
    std::optional<PressureSweep> sweep;
    std::optional<std::string> outputPath;
    std::optional<OutputFormat> format;

    /// The actuator geometry with t_w = ratio·h_ch.
    SpaGeometry spaWithRatio(double wallRatio) const;
    MyofibrilSpec buildSpec(const YeohMaterial& mat, const SpaGeometry& geometry) const;
    MyofibrilSpec spec() const { return buildSpec(material, spa); }
};

/// Throws DataError on syntax errors, missing keys, non-numeric values or
/// unknown material names.
RunConfig parseRunConfig(std::istream& in, const std::string& source = "<config>");
RunConfig loadRunConfig(const std::string& path);

/// Pressure grid used for a material in the FEM comparison study, if any.
std::optional<PressureSweep> studyPressureGrid(std::string_view materialName);

/// Wall-thickness to chamber-height ratios of the FEM comparison study.
std::span<const double> studyWallRatios();

/// Parses "0.25" or "1/4".
double parseRatio(std::string_view text);

}  // namespace apm
