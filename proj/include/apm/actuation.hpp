#pragma once

#include <utility>
#include <vector>

#include "apm/errors.hpp"
#include "apm/geometry.hpp"
#include "apm/material.hpp"

namespace apm {

/// Inclusive pressure grid in MPa. Points are start + i·step; the end point is
/// included when the span is a whole number of steps up to rounding noise.
struct PressureSweep {
    double start;
    double end;
    double step;

    void validate() const;
    std::vector<double> grid() const;
};

/// Everything computed at one pressure. Forces in N, lengths in mm.
struct ActuationState {
    double pressure = 0.0;
    double lambdaJz = 1.0;
    double adjustmentCoeff = 0.0;
    double expansionForce = 0.0;
    double restoringForce = 0.0;
    double spaForce = 0.0;
    double theta = 0.0;
    double contractionForce = 0.0;
    double r1 = 0.0;
    double myofibrilLength = 0.0;
    double lengthRatio = 1.0;
    LengthRatioStatus ratioStatus = LengthRatioStatus::valid;
};

/// A model failure at a specific grid pressure.
class SweepError : public DomainError {
public:
    SweepError(double pressure, const std::string& what);
    double pressure() const noexcept { return pressure_; }

private:
    double pressure_;
};

/// Stress carried by the junction cross-section, 2·P·K·a_ch·b_ch / (a_hz·b_hz), MPa.
double junctionStress(double pressure, const SpaGeometry& spa);

/// Junction-zone stretch obtained by inverting the material stress curve at the
/// junction stress. Throws UnbracketedRootError when the pressure drives the
/// stress beyond the inversion bracket.
double junctionStretch(double pressure, const SpaGeometry& spa, const YeohMaterial& material,
                       double lambdaMax = kDefaultLambdaMax);

/// Fitted adjustment coefficient c_m = −2.49·(t_w/h_ch) − 6.101·P + 11.457.
double adjustmentCoefficient(double wallRatio, double pressure);

/// F_e = c_m·P·π·a_ch·(λ_jz·h_jz + h_ch + 2t_w).
double expansionForce(double pressure, const SpaGeometry& spa, double lambdaJz,
                      double adjustmentCoeff);

/// F_r = σ(λ_jz)·a_hz·b_hz.
double restoringForce(double lambdaJz, const SpaGeometry& spa, const YeohMaterial& material);

/// F_SPA = F_e − F_r at one pressure. Fills pressure, λ_jz, c_m, F_e, F_r, F_SPA;
/// the contraction and length fields stay at their rest defaults.
ActuationState spaForce(double pressure, const MyofibrilSpec& spec);

/// F_contr = F_SPA·tanθ with θ from the actin arc. Also stores θ in `state`.
double contractionForce(ActuationState& state, const SpaGeometry& spa, double actinArc);

/// Full pipeline at one pressure, including the myofibril kinematics.
ActuationState evaluateState(double pressure, const MyofibrilSpec& spec);

/// One state per grid point in ascending pressure. Grid points are evaluated
/// concurrently; the result order does not depend on scheduling.
/// Throws SweepError naming the first failing pressure.
std::vector<ActuationState> simulateSweep(const MyofibrilSpec& spec, const PressureSweep& sweep);

/// Myofibril lengths recorded under one hanging load.
struct LoadedTrial {
    double loadMass = 0.0;                             // g
    std::vector<std::pair<double, double>> lengths;    // (pressure MPa, L_mf[P,σ] mm)
    double restingUnloaded = 0.0;                      // L_mf[0,0] mm

    /// Throws DataError when no record exists for the pressure.
    double lengthAt(double pressure) const;
};

/// ε[P,σ] = (L_mf[P,σ] − L_mf[0,σ]) / L_mf[0,0].
double actuationStrain(const LoadedTrial& trial, double pressure);

}  // namespace apm
