#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

namespace apm {

/// Default upper end of the stretch bracket used when inverting the stress curve.
inline constexpr double kDefaultLambdaMax = 5.0;

/// Yeoh hyperelastic elastomer, W = Σ c_i (I₁ − 3)^i with up to three terms.
/// Coefficients in MPa; higher-order terms default to zero.
class YeohMaterial {
public:
    /// Throws DomainError unless c1 > 0 and the uniaxial stress is strictly
    /// increasing on [1, lambdaMax].
    YeohMaterial(std::string name, double c1, double c2 = 0.0, double c3 = 0.0,
                 double density = 0.0, double lambdaMax = kDefaultLambdaMax);

    const std::string& name() const noexcept { return name_; }
    double c1() const noexcept { return coefficients_[0]; }
    double c2() const noexcept { return coefficients_[1]; }
    double c3() const noexcept { return coefficients_[2]; }
    const std::array<double, 3>& coefficients() const noexcept { return coefficients_; }
    /// kg/m³, informational only.
    double density() const noexcept { return density_; }

private:
    std::string name_;
    std::array<double, 3> coefficients_;
    double density_;
};

/// Dominant stretch and the first invariant of the incompressible uniaxial state.
struct StretchState {
    double lambda;
    double i1;

    static StretchState fromStretch(double lambda);
};

/// Strain energy density (MPa) at dominant stretch λ ≥ 1:
/// W = Σ c_i (λ² + λ⁻² − 2)^i.
double strainEnergy(const YeohMaterial& material, double lambda);

/// Uniaxial Cauchy stress σ = ∂W/∂λ (MPa):
/// (λ − λ⁻³)(2c1 + 4c2(λ − 1/λ)² + 6c3(λ − 1/λ)⁴).
double cauchyStress(const YeohMaterial& material, double lambda);

/// dσ/dλ, used by the Newton refinement of the inverse.
double cauchyStressSlope(const YeohMaterial& material, double lambda);

/// Stretch λ ∈ [1, lambdaMax] with cauchyStress(λ) = sigma. Throws DomainError
/// for sigma < 0 and UnbracketedRootError when sigma exceeds σ(lambdaMax).
double inverseCauchyStress(const YeohMaterial& material, double sigma,
                           double lambdaMax = kDefaultLambdaMax);

/// True iff t_w < h_ch / 4 (strict).
bool isThinWalled(double wallThickness, double chamberHeight);

/// Factor K with wall stress σ_w = P·K. Thin walls: h/(2t); thick walls:
/// 1 + h²/(2t(t + h)). The jump at t = h/4 is intentional.
double wallStressFactor(double wallThickness, double chamberHeight);

/// Elastomers with published coefficients: ecoflex-00-30, elastosil-m4601,
/// smooth-sil-950, dragonskin-30.
std::span<const YeohMaterial> builtinMaterials();

/// Throws DataError for unknown names.
const YeohMaterial& builtinMaterial(std::string_view name);

}  // namespace apm
