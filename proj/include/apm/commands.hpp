#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "apm/actuation.hpp"
#include "apm/config.hpp"

namespace apm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitModelError = 3;

/// Column order of the simulate table.
const std::vector<std::string>& simulateColumns();

/// One simulate row, fixed 6-decimal formatting.
std::string formatStateRow(const ActuationState& state);

/// Fixed 6-decimal text with negative zero printed as zero.
std::string fixed6(double value);

struct DesignOptions {
    double aBand = 0.0;
    double wallThickness = 0.0;
    double chamberHeight = 0.0;
    OutputFormat format = OutputFormat::csv;
};

struct SimulateOptions {
    std::string configPath;
    std::optional<std::string> outputPath;
    std::optional<OutputFormat> format;
};

struct ValidateOptions {
    std::string modelPath;
    std::string referencePath;
    std::optional<std::string> outputPath;
    OutputFormat format = OutputFormat::csv;
    int qqCount = 0;
    std::string qqPath = "qq_pairs.csv";
    bool resample = false;
    std::string modelXColumn = "x";
    std::string modelYColumn = "y";
};

struct SweepOptions {
    std::string configPath;
    /// Ratio strings such as "1/5" or "0.25"; empty means the config's own t_w/h_ch.
    std::vector<std::string> ratios;
    /// Material names; empty means the config's material.
    std::vector<std::string> materials;
    /// Use the FEM-study pressure grid of each material instead of [sweep].
    bool studyGrids = false;
    std::optional<std::string> outputPath;
    std::optional<OutputFormat> format;
};

// Each command writes its result to `out` (or the requested file) and
// diagnostics to `err`, and returns the process exit code.
int runDesign(const DesignOptions& options, std::ostream& out, std::ostream& err);
int runSimulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);
int runValidate(const ValidateOptions& options, std::ostream& out, std::ostream& err);
int runSweep(const SweepOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the subcommands above.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace apm::cli
