#include "apm/material.hpp"

#include <cmath>
#include <vector>

#include "apm/errors.hpp"
#include "apm/roots.hpp"

namespace apm {

namespace {

constexpr int kMonotonicitySamples = 2000;

void requireStretch(double lambda) {
    if (!(lambda >= 1.0)) {
        throw DomainError("stretch ratio must be >= 1, got " + std::to_string(lambda));
    }
}

// 2c1 + 4c2·x + 6c3·x² with x = (λ − 1/λ)²
double stressPolynomial(const std::array<double, 3>& c, double x) {
    return 2.0 * c[0] + 4.0 * c[1] * x + 6.0 * c[2] * x * x;
}

double stressUnchecked(const std::array<double, 3>& c, double lambda) {
    const double g = lambda - 1.0 / lambda;
    return (lambda - 1.0 / (lambda * lambda * lambda)) * stressPolynomial(c, g * g);
}

}  // namespace

YeohMaterial::YeohMaterial(std::string name, double c1, double c2, double c3, double density,
                           double lambdaMax)
    : name_(std::move(name)), coefficients_{c1, c2, c3}, density_(density) {
    if (!(c1 > 0.0)) throw DomainError("Yeoh coefficient c1 must be positive");
    if (!std::isfinite(c2) || !std::isfinite(c3)) {
        throw DomainError("Yeoh coefficients must be finite");
    }
    if (!(lambdaMax > 1.0)) throw DomainError("lambdaMax must exceed 1");
    double previous = 0.0;
    for (int i = 1; i <= kMonotonicitySamples; ++i) {
        const double lambda = 1.0 + (lambdaMax - 1.0) * i / kMonotonicitySamples;
        const double sigma = stressUnchecked(coefficients_, lambda);
        if (!(sigma > previous)) {
            throw DomainError("material '" + name_ +
                              "': Cauchy stress is not strictly increasing near stretch " +
                              std::to_string(lambda));
        }
        previous = sigma;
    }
}

StretchState StretchState::fromStretch(double lambda) {
    requireStretch(lambda);
    return {lambda, lambda * lambda + 1.0 / (lambda * lambda) + 1.0};
}

double strainEnergy(const YeohMaterial& material, double lambda) {
    requireStretch(lambda);
    const double g = lambda - 1.0 / lambda;
    const double x = g * g;  // λ² + λ⁻² − 2 = I₁ − 3
    const auto& c = material.coefficients();
    return x * (c[0] + x * (c[1] + x * c[2]));
}

double cauchyStress(const YeohMaterial& material, double lambda) {
    requireStretch(lambda);
    return stressUnchecked(material.coefficients(), lambda);
}

double cauchyStressSlope(const YeohMaterial& material, double lambda) {
    requireStretch(lambda);
    const auto& c = material.coefficients();
    const double l2 = lambda * lambda;
    const double l4 = l2 * l2;
    const double g = lambda - 1.0 / lambda;
    const double x = g * g;
    const double dx = 2.0 * g * (1.0 + 1.0 / l2);
    const double front = lambda - 1.0 / (l2 * lambda);
    const double dfront = 1.0 + 3.0 / l4;
    const double poly = stressPolynomial(c, x);
    const double dpoly = (4.0 * c[1] + 12.0 * c[2] * x) * dx;
    return dfront * poly + front * dpoly;
}

double inverseCauchyStress(const YeohMaterial& material, double sigma, double lambdaMax) {
    if (!(sigma >= 0.0)) throw DomainError("stress must be non-negative for inversion");
    if (!(lambdaMax > 1.0)) throw DomainError("lambdaMax must exceed 1");
    if (sigma == 0.0) return 1.0;
    const double top = cauchyStress(material, lambdaMax);
    if (sigma > top) {
        throw UnbracketedRootError("stress " + std::to_string(sigma) +
                                   " MPa exceeds the inversion bracket (sigma(" +
                                   std::to_string(lambdaMax) + ") = " + std::to_string(top) +
                                   " MPa)");
    }
    return roots::newtonBisect(
        [&](double lambda) {
            return std::pair{stressUnchecked(material.coefficients(), lambda) - sigma,
                             cauchyStressSlope(material, lambda)};
        },
        1.0, lambdaMax);
}

bool isThinWalled(double wallThickness, double chamberHeight) {
    return wallThickness < 0.25 * chamberHeight;
}

double wallStressFactor(double wallThickness, double chamberHeight) {
    if (!(wallThickness > 0.0) || !(chamberHeight > 0.0)) {
        throw DomainError("wall thickness and chamber height must be positive");
    }
    if (isThinWalled(wallThickness, chamberHeight)) return chamberHeight / (2.0 * wallThickness);
    return 1.0 + chamberHeight * chamberHeight /
                     (2.0 * wallThickness * (wallThickness + chamberHeight));
}

std::span<const YeohMaterial> builtinMaterials() {
    static const std::vector<YeohMaterial> table{
        YeohMaterial("ecoflex-00-30", 0.017, -0.0002, 0.000023, 1070.0),
        YeohMaterial("elastosil-m4601", 0.11, 0.02, 0.0, 1130.0),
        YeohMaterial("smooth-sil-950", 0.34, 0.0, 0.0, 1240.0),
        // density from the manufacturer's datasheet (specific gravity 1.08)
        YeohMaterial("dragonskin-30", 0.096, 0.0095, 0.0, 1080.0),
    };
    return table;
}

const YeohMaterial& builtinMaterial(std::string_view name) {
    for (const auto& m : builtinMaterials()) {
        if (m.name() == name) return m;
    }
    throw DataError("unknown material '" + std::string(name) + "'");
}

}  // namespace apm
