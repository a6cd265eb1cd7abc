#include "apm/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "apm/errors.hpp"

namespace apm {

namespace pt = boost::property_tree;

namespace {

double toNumber(std::string_view text, const std::string& what) {
    std::string s(text);
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw DataError(what + ": empty value");
    s = s.substr(first, last - first + 1);
    double value = 0.0;
    const char* begin = s.data();
    if (*begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
        throw DataError(what + ": '" + std::string(text) + "' is not a number");
    }
    return value;
}

class Section {
public:
    Section(const pt::ptree* tree, std::string name, std::string source)
        : tree_(tree), name_(std::move(name)), source_(std::move(source)) {}

    bool present() const { return tree_ != nullptr; }
    bool has(const std::string& key) const { return tree_ && tree_->find(key) != tree_->not_found(); }

    std::string text(const std::string& key) const {
        if (!has(key)) throw DataError(where(key) + ": missing");
        return tree_->get<std::string>(key);
    }
    double number(const std::string& key) const { return toNumber(text(key), where(key)); }
    std::optional<double> optionalNumber(const std::string& key) const {
        if (!has(key)) return std::nullopt;
        return number(key);
    }
    int integer(const std::string& key, int fallback) const {
        if (!has(key)) return fallback;
        const double v = number(key);
        if (v != std::floor(v) || std::abs(v) > 1e9) throw DataError(where(key) + ": not an integer");
        return static_cast<int>(v);
    }

private:
    std::string where(const std::string& key) const {
        return source_ + ": [" + name_ + "] " + key;
    }
    const pt::ptree* tree_;
    std::string name_;
    std::string source_;
};

Section section(const pt::ptree& root, const std::string& name, const std::string& source) {
    const auto it = root.find(name);
    return Section(it == root.not_found() ? nullptr : &it->second, name, source);
}

YeohMaterial parseMaterial(const Section& s) {
    if (!s.present()) throw DataError("missing [material] section");
    if (s.has("c1")) {
        const std::string name = s.has("name") ? s.text("name") : "custom";
        try {
            return YeohMaterial(name, s.number("c1"), s.optionalNumber("c2").value_or(0.0),
                                s.optionalNumber("c3").value_or(0.0),
                                s.optionalNumber("density").value_or(0.0));
        } catch (const DomainError& e) {
            throw DataError(std::string("[material]: ") + e.what());
        }
    }
    return builtinMaterial(s.text("name"));
}

}  // namespace

OutputFormat parseOutputFormat(std::string_view text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw DataError("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

SpaGeometry RunConfig::spaWithRatio(double wallRatio) const {
    if (!(wallRatio > 0.0)) throw DataError("t_w/h_ch ratio must be positive");
    SpaGeometry g = spa;
    g.wallThickness = wallRatio * g.chamberHeight;
    return g;
}

MyofibrilSpec RunConfig::buildSpec(const YeohMaterial& mat, const SpaGeometry& geometry) const {
    const auto design = designFromABand(sarcomere.aBand);
    SarcomereGeometry g = completeSarcomere(design, geometry, sarcomere.junctionsPerMyosin);
    if (sarcomere.iBand) g.iBand = *sarcomere.iBand;
    if (sarcomere.actinArc) g.actinArc = *sarcomere.actinArc;
    if (sarcomere.myosinHeight) g.myosinHeight = *sarcomere.myosinHeight;
    g.sarcomereHeight = sarcomere.sarcomereHeight;
    MyofibrilSpec spec{n, g, geometry, mat};
    spec.validate();
    return spec;
}

RunConfig parseRunConfig(std::istream& in, const std::string& source) {
    pt::ptree root;
    try {
        pt::read_ini(in, root);
    } catch (const pt::ini_parser_error& e) {
        throw DataError(source + ": " + e.message() + " (line " + std::to_string(e.line()) + ")");
    }

    const auto spaSection = section(root, "spa", source);
    if (!spaSection.present()) throw DataError(source + ": missing [spa] section");
    SpaGeometry spa{};
    bool ratioOnly = false;
    double assumedHch = spaSection.optionalNumber("assumed_h_ch").value_or(kDefaultAssumedChamberHeight);
    if (spaSection.has("t_w_over_h_ch") && !spaSection.has("t_w")) {
        ratioOnly = true;
        spa.chamberHeight = assumedHch;
        spa.wallThickness = spaSection.number("t_w_over_h_ch") * assumedHch;
    } else {
        spa.wallThickness = spaSection.number("t_w");
        spa.chamberHeight = spaSection.number("h_ch");
    }
    spa.chamberLength = spaSection.number("a_ch");
    spa.chamberWidth = spaSection.number("b_ch");
    spa.junctionHeight = spaSection.number("h_jz");
    spa.hZoneLength = spaSection.number("a_hz");
    spa.hZoneWidth = spaSection.number("b_hz");
    try {
        spa.validate();
    } catch (const DomainError& e) {
        throw DataError(source + ": [spa] " + e.what());
    }

    const auto sarc = section(root, "sarcomere", source);
    if (!sarc.present()) throw DataError(source + ": missing [sarcomere] section");
    SarcomereInput sarcomere;
    sarcomere.aBand = sarc.number("a_band");
    sarcomere.iBand = sarc.optionalNumber("i_band");
    sarcomere.actinArc = sarc.optionalNumber("actin_arc");
    sarcomere.myosinHeight = sarc.optionalNumber("myosin_height");
    sarcomere.sarcomereHeight = sarc.optionalNumber("sarcomere_height").value_or(0.0);
    sarcomere.junctionsPerMyosin = sarc.integer("junctions_per_myosin", 2);

    RunConfig config{
        .material = parseMaterial(section(root, "material", source)),
        .spa = spa,
        .ratioOnly = ratioOnly,
        .assumedChamberHeight = assumedHch,
        .sarcomere = sarcomere,
        .n = sarc.integer("n", 1),
        .sweep = std::nullopt,
        .outputPath = std::nullopt,
        .format = std::nullopt,
    };

    const auto sweep = section(root, "sweep", source);
    if (sweep.present()) {
        config.sweep = PressureSweep{sweep.number("start"), sweep.number("end"), sweep.number("step")};
        try {
            config.sweep->validate();
        } catch (const DomainError& e) {
            throw DataError(source + ": [sweep] " + e.what());
        }
    }
    const auto output = section(root, "output", source);
    if (output.has("path")) config.outputPath = output.text("path");
    if (output.has("format")) config.format = parseOutputFormat(output.text("format"));

    try {
        config.spec();
    } catch (const DomainError& e) {
        throw DataError(source + ": inconsistent geometry: " + e.what());
    }
    return config;
}

RunConfig loadRunConfig(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config '" + path + "'");
    return parseRunConfig(in, path);
}

std::optional<PressureSweep> studyPressureGrid(std::string_view materialName) {
    if (materialName == "ecoflex-00-30") return PressureSweep{0.001, 0.011, 0.001};
    if (materialName == "elastosil-m4601") return PressureSweep{0.01, 0.085, 0.005};
    if (materialName == "smooth-sil-950") return PressureSweep{0.02, 0.22, 0.02};
    return std::nullopt;
}

std::span<const double> studyWallRatios() {
    static constexpr std::array<double, 6> ratios{1.0 / 5, 1.0 / 4, 1.0 / 3, 1.0 / 2, 1.0, 3.0 / 2};
    return ratios;
}

double parseRatio(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return toNumber(text, "ratio");
    const double num = toNumber(text.substr(0, slash), "ratio numerator");
    const double den = toNumber(text.substr(slash + 1), "ratio denominator");
    if (den == 0.0) throw DataError("ratio denominator is zero");
    return num / den;
}

}  // namespace apm
