#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "apm/actuation.hpp"
#include "apm/config.hpp"
#include "apm/errors.hpp"
#include "oracles.hpp"

using namespace apm;
using std::numbers::pi;

namespace {

SpaGeometry prototypeSpa() { return {1.5, 9.5, 10.0, 5.0, 2.0, 6.0, 15.0}; }

// Prototype as built: A' = 30, h_m = 28, actin thread l = 32.
MyofibrilSpec prototype(int n = 1) {
    SarcomereGeometry s{30.0, 20.0, 32.0, 28.0, 0.0, 2};
    return {n, s, prototypeSpa(), builtinMaterial("dragonskin-30")};
}

SpaGeometry femSpa(double ratio, double hch = 10.0) {
    return {ratio * hch, 14.0, 14.0, hch, 3.0, 6.0, 20.0};
}

MyofibrilSpec femSpec(const YeohMaterial& m, double ratio) {
    const auto spa = femSpa(ratio);
    return {1, completeSarcomere(designFromABand(60.0), spa), spa, m};
}

}  // namespace

TEST(PressureSweep, GridSizes) {
    EXPECT_EQ((PressureSweep{0.001, 0.011, 0.001}.grid().size()), 11u);
    EXPECT_EQ((PressureSweep{0.01, 0.085, 0.005}.grid().size()), 16u);
    EXPECT_EQ((PressureSweep{0.02, 0.22, 0.02}.grid().size()), 11u);
    EXPECT_EQ((PressureSweep{0.01, 0.1, 0.01}.grid().size()), 10u);
    EXPECT_EQ((PressureSweep{0.05, 0.05, 0.01}.grid().size()), 1u);
    const auto wide = PressureSweep{0.01, 0.02, 0.5}.grid();
    ASSERT_EQ(wide.size(), 1u);
    EXPECT_EQ(wide[0], 0.01);
    const auto g = PressureSweep{0.01, 0.085, 0.005}.grid();
    EXPECT_EQ(g.back(), 0.085);
    EXPECT_THROW((PressureSweep{-0.1, 0.1, 0.01}.grid()), DomainError);
    EXPECT_THROW((PressureSweep{0.2, 0.1, 0.01}.grid()), DomainError);
    EXPECT_THROW((PressureSweep{0.0, 0.1, 0.0}.grid()), DomainError);
}

TEST(Actuation, JunctionStretchFixtures) {
    const auto& ds = builtinMaterial("dragonskin-30");
    EXPECT_EQ(junctionStretch(0.0, prototypeSpa(), ds), 1.0);
    // σ_jz = 2·0.1·2.282051·95/90
    EXPECT_NEAR(junctionStress(0.1, prototypeSpa()), 0.481766381766381766, 1e-15);
    EXPECT_NEAR(junctionStretch(0.1, prototypeSpa(), ds), 1.93395848050572384, 1e-12);
    EXPECT_NEAR(junctionStretch(0.1, prototypeSpa(), ds), 1.93, 0.01);
    EXPECT_THROW(junctionStretch(-0.01, prototypeSpa(), ds), DomainError);
    EXPECT_THROW(junctionStretch(5.0, prototypeSpa(), ds), UnbracketedRootError);
}

TEST(Actuation, SmallPressureLinearisation) {
    for (const char* name : {"elastosil-m4601", "smooth-sil-950", "dragonskin-30"}) {
        const auto& m = builtinMaterial(name);
        const double p = 1e-5;
        const double expected = junctionStress(p, prototypeSpa()) / (8.0 * m.c1());
        const double actual = junctionStretch(p, prototypeSpa(), m) - 1.0;
        EXPECT_NEAR(actual / expected, 1.0, 0.01) << name;
    }
}

TEST(Actuation, AdjustmentCoefficient) {
    EXPECT_NEAR(adjustmentCoefficient(0.3, 0.1), 10.0999, 1e-12);
    EXPECT_EQ(adjustmentCoefficient(0.0, 0.0), 11.457);
    EXPECT_NEAR(adjustmentCoefficient(1.5, 0.22), 6.37978, 1e-12);
    EXPECT_LT(adjustmentCoefficient(0.5, 0.1), adjustmentCoefficient(0.4, 0.1));
    EXPECT_LT(adjustmentCoefficient(0.5, 0.2), adjustmentCoefficient(0.5, 0.1));
}

TEST(Actuation, ExpansionForce) {
    const auto spa = prototypeSpa();
    EXPECT_EQ(expansionForce(0.0, spa, 1.7, 10.0), 0.0);
    const double lambda = 1.93395848050572384;
    EXPECT_NEAR(expansionForce(0.1, spa, lambda, 10.0999), 357.737980287061021, 1e-9);
    // affine in λ
    const double f1 = expansionForce(0.1, spa, 1.0, 10.0);
    const double f2 = expansionForce(0.1, spa, 2.0, 10.0);
    const double f3 = expansionForce(0.1, spa, 3.0, 10.0);
    EXPECT_NEAR(f3 - f2, f2 - f1, 1e-12);
    EXPECT_GT(f2, f1);
}

TEST(Actuation, RestoringForceIdentity) {
    const auto& ds = builtinMaterial("dragonskin-30");
    EXPECT_EQ(restoringForce(1.0, prototypeSpa(), ds), 0.0);
    const double lambda = junctionStretch(0.1, prototypeSpa(), ds);
    EXPECT_NEAR(restoringForce(lambda, prototypeSpa(), ds), 43.3589743589743590, 1e-9);

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const auto& m = builtinMaterials()[i % builtinMaterials().size()];
        SpaGeometry g{0.5 + 3 * unit(rng), 5 + 10 * unit(rng), 5 + 10 * unit(rng), 3 + 8 * unit(rng),
                      1 + 3 * unit(rng),   4 + 4 * unit(rng),  10 + 10 * unit(rng)};
        const double p = (0.05 + 0.9 * unit(rng)) * cauchyStress(m, 3.0) / junctionStress(1.0, g);
        const double lam = junctionStretch(p, g, m);
        const double expected =
            2.0 * p * wallStressFactor(g.wallThickness, g.chamberHeight) * g.chamberLength * g.chamberWidth;
        EXPECT_NEAR(restoringForce(lam, g, m) / expected, 1.0, 1e-6);
    }
}

TEST(Actuation, PrototypeStateAtOneBar) {
    const auto s = evaluateState(0.1, prototype());
    EXPECT_NEAR(s.lambdaJz, 1.93395848050572384, 1e-12);
    EXPECT_NEAR(s.adjustmentCoeff, 10.0999, 1e-12);
    EXPECT_NEAR(s.expansionForce, 357.737980287061021, 1e-9);
    EXPECT_NEAR(s.restoringForce, 43.3589743589743590, 1e-9);
    EXPECT_NEAR(s.spaForce, 314.379005928086662, 1e-9);
    EXPECT_NEAR(s.theta, 1.05670387918801633, 1e-12);
    EXPECT_NEAR(s.contractionForce, 556.675272198038934, 1e-8);
    EXPECT_LT(s.lengthRatio, 1.0);
    EXPECT_EQ(s.ratioStatus, LengthRatioStatus::valid);
}

TEST(Actuation, ZeroPressureIsRestState) {
    for (const auto& spec : {prototype(), prototype(3),
                             femSpec(builtinMaterial("ecoflex-00-30"), 0.2)}) {
        const auto s = evaluateState(0.0, spec);
        EXPECT_EQ(s.lambdaJz, 1.0);
        EXPECT_EQ(s.expansionForce, 0.0);
        EXPECT_EQ(s.restoringForce, 0.0);
        EXPECT_EQ(s.spaForce, 0.0);
        EXPECT_EQ(s.contractionForce, 0.0);
        EXPECT_EQ(s.lengthRatio, 1.0);
        EXPECT_EQ(s.ratioStatus, LengthRatioStatus::valid);
    }
}

TEST(Actuation, ContractionForce) {
    ActuationState s;
    s.spaForce = 0.0;
    EXPECT_EQ(contractionForce(s, prototypeSpa(), 32.0), 0.0);
    // arc chosen so that θ = π/4
    s.spaForce = 3.0;
    const double arc = 12.0 * std::sqrt(2.0);
    EXPECT_NEAR(contractionForce(s, prototypeSpa(), arc), 3.0, 1e-12);
    EXPECT_NEAR(s.theta, pi / 4, 1e-14);
    EXPECT_THROW(contractionForce(s, prototypeSpa(), 10.0), DomainError);
}

TEST(Actuation, SimulateSweepOrderedAndDeterministic) {
    const auto a = simulateSweep(prototype(), {0.01, 0.1, 0.01});
    const auto b = simulateSweep(prototype(), {0.01, 0.1, 0.01});
    ASSERT_EQ(a.size(), 10u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_NEAR(a[i].pressure, 0.01 * (i + 1), 1e-15);
        EXPECT_EQ(a[i].spaForce, b[i].spaForce);
        EXPECT_EQ(a[i].myofibrilLength, b[i].myofibrilLength);
        if (i > 0) EXPECT_GT(a[i].pressure, a[i - 1].pressure);
    }
}

TEST(Actuation, LargeSweepUsesWorkersButKeepsOrder) {
    const auto spec = prototype();
    const auto states = simulateSweep(spec, {0.0, 0.1, 0.0001});
    ASSERT_EQ(states.size(), 1001u);
    for (std::size_t i = 0; i < states.size(); i += 97) {
        const auto single = evaluateState(states[i].pressure, spec);
        EXPECT_EQ(states[i].spaForce, single.spaForce);
        EXPECT_EQ(states[i].r1, single.r1);
    }
}

TEST(Actuation, SweepErrorReportsPressure) {
    auto spec = prototype();
    spec.sarcomere.actinArc = 21.0;  // chord outgrows the arc once λ_jz passes 1.25
    try {
        simulateSweep(spec, {0.0, 0.1, 0.01});
        FAIL() << "expected SweepError";
    } catch (const SweepError& e) {
        EXPECT_GT(e.pressure(), 0.0);
        EXPECT_NE(std::string(e.what()).find("pressure"), std::string::npos);
    }
}

TEST(Actuation, MonotoneOnStudyGrids) {
    for (const char* name : {"ecoflex-00-30", "elastosil-m4601", "smooth-sil-950"}) {
        const auto& m = builtinMaterial(name);
        for (double ratio : studyWallRatios()) {
            const auto states = simulateSweep(femSpec(m, ratio), *studyPressureGrid(name));
            for (std::size_t i = 1; i < states.size(); ++i) {
                EXPECT_GT(states[i].lambdaJz, states[i - 1].lambdaJz) << name << " " << ratio;
                EXPECT_GT(states[i].spaForce, states[i - 1].spaForce) << name << " " << ratio;
            }
        }
    }
}

TEST(Actuation, StiffnessOrderingOfMaxForce) {
    std::vector<double> meanMax;
    for (const char* name : {"ecoflex-00-30", "elastosil-m4601", "smooth-sil-950"}) {
        double sum = 0.0;
        for (double ratio : studyWallRatios()) {
            const auto states = simulateSweep(femSpec(builtinMaterial(name), ratio), *studyPressureGrid(name));
            sum += states.back().spaForce;
        }
        meanMax.push_back(sum / studyWallRatios().size());
    }
    EXPECT_LT(meanMax[0], meanMax[1]);
    EXPECT_LT(meanMax[1], meanMax[2]);
}

TEST(Actuation, ActuationStrain) {
    LoadedTrial trial{50.0, {{0.0, 165.0}, {0.1, 165.0 * 0.875}}, 165.0};
    EXPECT_NEAR(actuationStrain(trial, 0.1), -0.125, 1e-12);
    EXPECT_EQ(actuationStrain(trial, 0.0), 0.0);
    LoadedTrial fixture{20.0, {{0.0, 165.0}, {0.1, 144.4}}, 165.0};
    EXPECT_NEAR(actuationStrain(fixture, 0.1), -0.12484848484848485, 1e-12);
    LoadedTrial stretched{100.0, {{0.0, 170.0}, {0.05, 172.0}}, 165.0};
    EXPECT_GT(actuationStrain(stretched, 0.05), 0.0);
    EXPECT_THROW(actuationStrain(trial, 0.05), DataError);
    LoadedTrial noRest{10.0, {{0.1, 150.0}}, 165.0};
    EXPECT_THROW(actuationStrain(noRest, 0.1), DataError);
}
