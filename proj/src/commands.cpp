#include "apm/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "apm/errors.hpp"
#include "apm/validation.hpp"

namespace apm::cli {

using nlohmann::ordered_json;

namespace {

ordered_json stateJson(const ActuationState& s) {
    return ordered_json{
        {"pressure_mpa", s.pressure},      {"lambda_jz", s.lambdaJz},
        {"c_m", s.adjustmentCoeff},        {"f_e_n", s.expansionForce},
        {"f_r_n", s.restoringForce},       {"f_spa_n", s.spaForce},
        {"theta_rad", s.theta},            {"f_contr_n", s.contractionForce},
        {"r1_mm", s.r1},                   {"l_mf_mm", s.myofibrilLength},
        {"length_ratio", s.lengthRatio},   {"ratio_flag", std::string(toString(s.ratioStatus))},
    };
}

ordered_json specJson(const MyofibrilSpec& spec) {
    const auto& m = spec.material;
    const auto& g = spec.spa;
    const auto& s = spec.sarcomere;
    return ordered_json{
        {"material", {{"name", m.name()}, {"c1", m.c1()}, {"c2", m.c2()}, {"c3", m.c3()},
                      {"density", m.density()}}},
        {"spa", {{"t_w", g.wallThickness}, {"a_ch", g.chamberLength}, {"b_ch", g.chamberWidth},
                 {"h_ch", g.chamberHeight}, {"h_jz", g.junctionHeight}, {"a_hz", g.hZoneLength},
                 {"b_hz", g.hZoneWidth}}},
        {"sarcomere", {{"n", spec.n}, {"a_band", s.aBand}, {"i_band", s.iBand},
                       {"actin_arc", s.actinArc}, {"myosin_height", s.myosinHeight},
                       {"junctions_per_myosin", s.junctionsPerMyosin}}},
    };
}

std::string csvHeader(const std::vector<std::string>& columns) {
    std::string line;
    for (const auto& c : columns) {
        if (!line.empty()) line += ',';
        line += c;
    }
    return line;
}

// Writes the buffered result to the requested file, or to `out`.
int emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out,
         std::ostream& err) {
    if (!path) {
        out << text;
        return kExitOk;
    }
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text)) {
        err << "error: cannot write '" << *path << "'\n";
        return kExitInputError;
    }
    return kExitOk;
}

void warnRatioFlags(const std::vector<ActuationState>& states, std::ostream& err) {
    for (const auto& s : states) {
        if (s.ratioStatus != LengthRatioStatus::valid) {
            err << "warning: pressure " << fixed6(s.pressure) << " MPa: length ratio "
                << fixed6(s.lengthRatio) << " is " << toString(s.ratioStatus) << '\n';
        }
    }
}

void warnDesign(const MyofibrilSpec& spec, std::ostream& err) {
    for (const auto& note : spec.designWarnings()) err << "warning: " << note << '\n';
}

}  // namespace

const std::vector<std::string>& simulateColumns() {
    static const std::vector<std::string> columns{
        "pressure_mpa", "lambda_jz", "c_m",   "f_e_n",   "f_r_n",        "f_spa_n",
        "theta_rad",    "f_contr_n", "r1_mm", "l_mf_mm", "length_ratio", "ratio_flag"};
    return columns;
}

std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string text(buf);
    if (text == "-0.000000") text.erase(0, 1);
    return text;
}

std::string formatStateRow(const ActuationState& s) {
    std::string row;
    for (double v : {s.pressure, s.lambdaJz, s.adjustmentCoeff, s.expansionForce, s.restoringForce,
                     s.spaForce, s.theta, s.contractionForce, s.r1, s.myofibrilLength,
                     s.lengthRatio}) {
        row += fixed6(v);
        row += ',';
    }
    row += toString(s.ratioStatus);
    return row;
}

int runDesign(const DesignOptions& o, std::ostream& out, std::ostream& err) {
    try {
        const auto design = designFromABand(o.aBand);
        const auto bounds = myosinHeightBounds(o.aBand, o.wallThickness, o.chamberHeight);
        const double k = wallStressFactor(o.wallThickness, o.chamberHeight);
        const std::string regime = isThinWalled(o.wallThickness, o.chamberHeight) ? "thin" : "thick";
        std::ostringstream os;
        if (o.format == OutputFormat::json) {
            ordered_json j{{"a_band_mm", design.aBand},
                           {"i_band_mm", design.iBand},
                           {"actin_arc_mm", design.actinArc},
                           {"rest_radius_mm", design.restRadius},
                           {"myosin_height_min_mm", bounds.low},
                           {"myosin_height_max_mm", bounds.high},
                           {"wall_regime", regime},
                           {"wall_stress_factor", k}};
            os << j.dump(2) << '\n';
        } else {
            os << "quantity,value\n"
               << "a_band_mm," << fixed6(design.aBand) << '\n'
               << "i_band_mm," << fixed6(design.iBand) << '\n'
               << "actin_arc_mm," << fixed6(design.actinArc) << '\n'
               << "rest_radius_mm," << fixed6(design.restRadius) << '\n'
               << "myosin_height_min_mm," << fixed6(bounds.low) << '\n'
               << "myosin_height_max_mm," << fixed6(bounds.high) << '\n'
               << "wall_regime," << regime << '\n'
               << "wall_stress_factor," << fixed6(k) << '\n';
        }
        return emit(os.str(), std::nullopt, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

int runSimulate(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
    std::optional<RunConfig> config;
    try {
        config = loadRunConfig(o.configPath);
        if (!config->sweep) throw DataError(o.configPath + ": missing [sweep] section");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    const auto spec = config->spec();
    warnDesign(spec, err);
    if (config->ratioOnly) {
        err << "note: using assumed h_ch = " << fixed6(config->assumedChamberHeight) << " mm\n";
    }

    std::vector<ActuationState> states;
    try {
        states = simulateSweep(spec, *config->sweep);
    } catch (const SweepError& e) {
        err << "error: " << e.what() << '\n';
        return kExitModelError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitModelError;
    }
    warnRatioFlags(states, err);

    const auto format = o.format.value_or(config->format.value_or(OutputFormat::csv));
    std::ostringstream os;
    if (format == OutputFormat::json) {
        ordered_json meta = specJson(spec);
        meta["sweep"] = {{"start", config->sweep->start},
                         {"end", config->sweep->end},
                         {"step", config->sweep->step}};
        meta["resting_length_mm"] = restingLength(spec);
        if (config->ratioOnly) meta["assumed_h_ch_mm"] = config->assumedChamberHeight;
        ordered_json j{{"metadata", meta}, {"states", ordered_json::array()}};
        for (const auto& s : states) j["states"].push_back(stateJson(s));
        os << j.dump(2) << '\n';
    } else {
        os << csvHeader(simulateColumns()) << '\n';
        for (const auto& s : states) os << formatStateRow(s) << '\n';
    }
    return emit(os.str(), o.outputPath ? o.outputPath : config->outputPath, out, err);
}

int runValidate(const ValidateOptions& o, std::ostream& out, std::ostream& err) {
    AgreementReport report;
    try {
        const Curve model = readCurveCsvFile(o.modelPath, o.modelXColumn, o.modelYColumn);
        const Curve reference = readCurveCsvFile(o.referencePath);
        report = compareCurves(model, reference, o.qqCount, o.resample);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    std::ostringstream os;
    if (o.format == OutputFormat::json) {
        ordered_json j{{"model", o.modelPath},
                       {"reference", o.referencePath},
                       {"frechet_normalized", report.frechetNormalized},
                       {"frechet_normalized_pct", 100.0 * report.frechetNormalized},
                       {"frechet_raw", report.frechetRaw},
                       {"r_squared", report.rSquared},
                       {"model_points", report.modelPoints},
                       {"reference_points", report.referencePoints},
                       {"resampled", report.resampled}};
        if (!report.qqPairs.empty()) {
            j["qq_pairs"] = ordered_json::array();
            for (const auto& [r, m] : report.qqPairs) j["qq_pairs"].push_back({r, m});
        }
        os << j.dump(2) << '\n';
    } else {
        os << "frechet_normalized_pct,frechet_raw,r_squared,model_points,reference_points,resampled\n"
           << fixed6(100.0 * report.frechetNormalized) << ',' << fixed6(report.frechetRaw) << ','
           << fixed6(report.rSquared) << ',' << report.modelPoints << ',' << report.referencePoints
           << ',' << (report.resampled ? "true" : "false") << '\n';
    }
    if (const int rc = emit(os.str(), o.outputPath, out, err); rc != kExitOk) return rc;

    if (!report.qqPairs.empty()) {
        std::ostringstream qq;
        qq << "reference_quantile,model_quantile\n";
        for (const auto& [r, m] : report.qqPairs) qq << fixed6(r) << ',' << fixed6(m) << '\n';
        return emit(qq.str(), o.qqPath, out, err);
    }
    return kExitOk;
}

int runSweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
    struct Cell {
        std::string material;
        double ratio;
        SpaGeometry spa;
        std::vector<ActuationState> states;
        double maxSpaForce;
    };

    std::optional<RunConfig> config;
    std::vector<YeohMaterial> materials;
    std::vector<double> ratios;
    try {
        config = loadRunConfig(o.configPath);
        if (o.materials.empty()) {
            materials.push_back(config->material);
        } else {
            for (const auto& name : o.materials) materials.push_back(builtinMaterial(name));
        }
        for (const auto& r : o.ratios) ratios.push_back(parseRatio(r));
        for (const auto& m : materials) {
            const bool haveGrid = (o.studyGrids && studyPressureGrid(m.name())) || config->sweep;
            if (!haveGrid) throw DataError("no pressure grid for material '" + m.name() + "'");
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    if (config->ratioOnly) {
        err << "note: using assumed h_ch = " << fixed6(config->assumedChamberHeight) << " mm\n";
    }

    std::vector<Cell> cells;
    std::map<std::string, std::pair<double, int>> maxima;  // material -> (sum of maxima, count)
    for (const auto& material : materials) {
        const PressureSweep grid = o.studyGrids && studyPressureGrid(material.name())
                                       ? *studyPressureGrid(material.name())
                                       : *config->sweep;
        const std::vector<double> cellRatios =
            ratios.empty() ? std::vector<double>{config->spa.wallRatio()} : ratios;
        for (const double ratio : cellRatios) {
            Cell cell{material.name(), ratio,
                      ratios.empty() ? config->spa : config->spaWithRatio(ratio), {}, 0.0};
            try {
                const auto spec = config->buildSpec(material, cell.spa);
                cell.states = simulateSweep(spec, grid);
            } catch (const DomainError& e) {
                err << "error: material " << material.name() << ", t_w/h_ch " << fixed6(ratio)
                    << ": " << e.what() << '\n';
                return kExitModelError;
            }
            warnRatioFlags(cell.states, err);
            cell.maxSpaForce = cell.states.front().spaForce;
            for (const auto& s : cell.states) cell.maxSpaForce = std::max(cell.maxSpaForce, s.spaForce);
            auto& [sum, count] = maxima[cell.material];
            sum += cell.maxSpaForce;
            ++count;
            cells.push_back(std::move(cell));
        }
    }
    auto meanMax = [&](const std::string& material) {
        const auto& [sum, count] = maxima.at(material);
        return sum / count;
    };

    const auto format = o.format.value_or(config->format.value_or(OutputFormat::csv));
    std::ostringstream os;
    if (format == OutputFormat::json) {
        ordered_json j;
        j["metadata"] = {{"h_ch_mm", config->spa.chamberHeight},
                         {"study_grids", o.studyGrids}};
        if (config->ratioOnly) j["metadata"]["assumed_h_ch_mm"] = config->assumedChamberHeight;
        j["cells"] = ordered_json::array();
        for (const auto& c : cells) {
            ordered_json cj{{"material", c.material},
                            {"t_w_over_h_ch", c.ratio},
                            {"t_w_mm", c.spa.wallThickness},
                            {"h_ch_mm", c.spa.chamberHeight},
                            {"max_f_spa_n", c.maxSpaForce},
                            {"states", ordered_json::array()}};
            for (const auto& s : c.states) cj["states"].push_back(stateJson(s));
            j["cells"].push_back(std::move(cj));
        }
        j["materials"] = ordered_json::array();
        for (const auto& m : materials) {
            j["materials"].push_back({{"material", m.name()}, {"mean_max_f_spa_n", meanMax(m.name())}});
        }
        os << j.dump(2) << '\n';
    } else {
        std::vector<std::string> columns{"material", "t_w_over_h_ch", "t_w_mm", "h_ch_mm"};
        columns.insert(columns.end(), simulateColumns().begin(), simulateColumns().end());
        columns.emplace_back("max_f_spa_n");
        columns.emplace_back("mean_max_f_spa_n");
        os << csvHeader(columns) << '\n';
        for (const auto& c : cells) {
            const std::string prefix = c.material + ',' + fixed6(c.ratio) + ',' +
                                       fixed6(c.spa.wallThickness) + ',' +
                                       fixed6(c.spa.chamberHeight) + ',';
            const std::string suffix = ',' + fixed6(c.maxSpaForce) + ',' + fixed6(meanMax(c.material));
            for (const auto& s : c.states) os << prefix << formatStateRow(s) << suffix << '\n';
        }
    }
    return emit(os.str(), o.outputPath ? o.outputPath : config->outputPath, out, err);
}

}  // namespace apm::cli
