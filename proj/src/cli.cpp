#include <CLI11.hpp>

#include "apm/commands.hpp"

namespace apm::cli {

namespace {

std::optional<OutputFormat> formatFrom(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parseOutputFormat(text);
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Design, simulate and validate artificial pneumatic myofibrils", "apm"};
    app.require_subcommand(1);
    const auto formats = CLI::IsMember({"csv", "json"});

    DesignOptions design;
    std::string designFormat = "csv";
    auto* designCmd = app.add_subcommand("design", "Derive sarcomere dimensions from the A-band");
    designCmd->add_option("--a-band", design.aBand, "A-band length A' (mm)")->required();
    designCmd->add_option("--t-w", design.wallThickness, "chamber wall thickness (mm)")->required();
    designCmd->add_option("--h-ch", design.chamberHeight, "chamber height (mm)")->required();
    designCmd->add_option("--format", designFormat, "csv or json")->check(formats);

    SimulateOptions simulate;
    std::string simulateOut, simulateFormat;
    auto* simulateCmd = app.add_subcommand("simulate", "Run a pressure sweep for one design");
    simulateCmd->add_option("--config", simulate.configPath, "run config file")->required();
    simulateCmd->add_option("--out", simulateOut, "output file (default: stdout)");
    simulateCmd->add_option("--format", simulateFormat, "csv or json")->check(formats);

    ValidateOptions validate;
    std::string validateOut, validateFormat = "csv";
    auto* validateCmd = app.add_subcommand("validate", "Compare a model curve with a reference curve");
    validateCmd->add_option("model", validate.modelPath, "model curve CSV")->required();
    validateCmd->add_option("reference", validate.referencePath, "reference curve CSV (x,y)")->required();
    validateCmd->add_option("--out", validateOut, "report file (default: stdout)");
    validateCmd->add_option("--format", validateFormat, "csv or json")->check(formats);
    validateCmd->add_option("--qq", validate.qqCount, "number of Q-Q quantile pairs to write")
        ->check(CLI::Range(2, 1000000));
    validateCmd->add_option("--qq-out", validate.qqPath, "Q-Q pairs CSV path");
    validateCmd->add_flag("--resample", validate.resample,
                          "interpolate the model onto the reference x grid");
    validateCmd->add_option("--x-column", validate.modelXColumn, "model x column name");
    validateCmd->add_option("--y-column", validate.modelYColumn, "model y column name");

    SweepOptions sweep;
    std::string sweepOut, sweepFormat;
    auto* sweepCmd = app.add_subcommand("sweep", "Sweep materials and wall ratios");
    sweepCmd->add_option("--config", sweep.configPath, "run config file")->required();
    sweepCmd->add_option("--ratios", sweep.ratios, "t_w/h_ch ratios, e.g. 1/5,1/4")->delimiter(',');
    sweepCmd->add_option("--materials", sweep.materials, "built-in material names")->delimiter(',');
    sweepCmd->add_flag("--study-grids", sweep.studyGrids,
                       "use the FEM-study pressure grid of each material");
    sweepCmd->add_option("--out", sweepOut, "output file (default: stdout)");
    sweepCmd->add_option("--format", sweepFormat, "csv or json")->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    auto optionalPath = [](const std::string& s) -> std::optional<std::string> {
        if (s.empty()) return std::nullopt;
        return s;
    };
    if (*designCmd) {
        design.format = parseOutputFormat(designFormat);
        return runDesign(design, out, err);
    }
    if (*simulateCmd) {
        simulate.outputPath = optionalPath(simulateOut);
        simulate.format = formatFrom(simulateFormat);
        return runSimulate(simulate, out, err);
    }
    if (*validateCmd) {
        validate.outputPath = optionalPath(validateOut);
        validate.format = parseOutputFormat(validateFormat);
        return runValidate(validate, out, err);
    }
    sweep.outputPath = optionalPath(sweepOut);
    sweep.format = formatFrom(sweepFormat);
    return runSweep(sweep, out, err);
}

}  // namespace apm::cli
