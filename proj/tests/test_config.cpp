#include <gtest/gtest.h>

#include <sstream>

#include "apm/config.hpp"
#include "apm/errors.hpp"

using namespace apm;

namespace {

RunConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parseRunConfig(in, "test.ini");
}

const char* kSpa = "[spa]\nt_w = 1.5\nh_ch = 5\na_ch = 9.5\nb_ch = 10\nh_jz = 2\na_hz = 6\nb_hz = 15\n";

}  // namespace

TEST(Config, PrototypeFile) {
    const auto c = loadRunConfig(APM_CONFIG_DIR "/prototype.ini");
    EXPECT_EQ(c.material.name(), "dragonskin-30");
    EXPECT_FALSE(c.ratioOnly);
    EXPECT_DOUBLE_EQ(c.spa.wallThickness, 1.5);
    ASSERT_TRUE(c.sweep);
    EXPECT_EQ(c.sweep->grid().size(), 10u);
    const auto spec = c.spec();
    EXPECT_EQ(spec.n, 1);
    EXPECT_DOUBLE_EQ(spec.sarcomere.iBand, 20.0);
    EXPECT_DOUBLE_EQ(spec.sarcomere.actinArc, 32.0);
    EXPECT_DOUBLE_EQ(spec.sarcomere.myosinHeight, 28.0);
    EXPECT_EQ(spec.sarcomere.junctionsPerMyosin, 2);
}

TEST(Config, RatioOnlyUsesAssumedChamberHeight) {
    const auto c = loadRunConfig(APM_CONFIG_DIR "/fem_study.ini");
    EXPECT_TRUE(c.ratioOnly);
    EXPECT_DOUBLE_EQ(c.spa.chamberHeight, 10.0);
    EXPECT_DOUBLE_EQ(c.spa.wallThickness, 2.5);
    EXPECT_FALSE(c.sweep);
    const auto g = c.spaWithRatio(1.5);
    EXPECT_DOUBLE_EQ(g.wallThickness, 15.0);
    EXPECT_DOUBLE_EQ(g.chamberHeight, 10.0);
    EXPECT_THROW(c.spaWithRatio(0.0), DataError);
}

TEST(Config, DefaultsFollowDesignRules) {
    const auto c = parse(std::string("[material]\nname = smooth-sil-950\n") + kSpa +
                         "[sarcomere]\na_band = 30\nn = 3\n");
    const auto spec = c.spec();
    EXPECT_EQ(spec.n, 3);
    EXPECT_DOUBLE_EQ(spec.sarcomere.iBand, 20.0);
    EXPECT_NEAR(spec.sarcomere.actinArc, 10.0 * 3.14159265358979323846, 1e-12);
    EXPECT_DOUBLE_EQ(spec.sarcomere.myosinHeight, 28.0);
    EXPECT_TRUE(spec.designWarnings().empty());
}

TEST(Config, CustomMaterialCoefficients) {
    const auto c = parse(std::string("[material]\nc1 = 0.2\nc2 = 0.01\n") + kSpa +
                         "[sarcomere]\na_band = 30\n");
    EXPECT_EQ(c.material.name(), "custom");
    EXPECT_DOUBLE_EQ(c.material.c1(), 0.2);
    EXPECT_DOUBLE_EQ(c.material.c3(), 0.0);
}

TEST(Config, OutputSection) {
    const auto c = parse(std::string("[material]\nname = dragonskin-30\n") + kSpa +
                         "[sarcomere]\na_band = 30\n[output]\npath = out.csv\nformat = json\n");
    EXPECT_EQ(c.outputPath, "out.csv");
    EXPECT_EQ(c.format, OutputFormat::json);
}

TEST(Config, Errors) {
    const std::string material = "[material]\nname = dragonskin-30\n";
    const std::string sarc = "[sarcomere]\na_band = 30\n";
    EXPECT_THROW(parse(material + sarc), DataError);                                   // no [spa]
    EXPECT_THROW(parse(material + kSpa), DataError);                                   // no [sarcomere]
    EXPECT_THROW(parse(std::string(kSpa) + sarc), DataError);                          // no [material]
    EXPECT_THROW(parse("[material]\nname = rubber\n" + std::string(kSpa) + sarc), DataError);
    EXPECT_THROW(parse(material + kSpa + "[sarcomere]\na_band = thirty\n"), DataError);
    EXPECT_THROW(parse(material + kSpa + sarc + "[sweep]\nstart = 0.1\nend = 0.0\nstep = 0.01\n"),
                 DataError);
    EXPECT_THROW(parse(material + kSpa + sarc + "[output]\nformat = xml\n"), DataError);
    EXPECT_THROW(parse("this is not ini\n[[["), DataError);
    EXPECT_THROW(parse(material + kSpa + "[sarcomere]\na_band = 30\nn = 1.5\n"), DataError);
    EXPECT_THROW(loadRunConfig("/nonexistent/config.ini"), DataError);
    std::string thinWall = kSpa;
    thinWall.replace(thinWall.find("t_w = 1.5"), 9, "t_w = -1");
    EXPECT_THROW(parse(material + thinWall + sarc), DataError);
}

TEST(Config, PressureGridsAndRatios) {
    EXPECT_EQ(studyPressureGrid("ecoflex-00-30")->grid().size(), 11u);
    EXPECT_EQ(studyPressureGrid("elastosil-m4601")->grid().size(), 16u);
    EXPECT_EQ(studyPressureGrid("smooth-sil-950")->grid().size(), 11u);
    EXPECT_FALSE(studyPressureGrid("dragonskin-30"));
    EXPECT_EQ(studyWallRatios().size(), 6u);
    EXPECT_DOUBLE_EQ(parseRatio("1/4"), 0.25);
    EXPECT_DOUBLE_EQ(parseRatio("0.5"), 0.5);
    EXPECT_DOUBLE_EQ(parseRatio("3/2"), 1.5);
    EXPECT_THROW(parseRatio("1/0"), DataError);
    EXPECT_THROW(parseRatio("half"), DataError);
    EXPECT_EQ(parseOutputFormat("csv"), OutputFormat::csv);
    EXPECT_THROW(parseOutputFormat("CSV"), DataError);
}
