#include "apm/actuation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <thread>

namespace apm {

namespace {

// Grids shorter than this are evaluated on the calling thread.
constexpr std::size_t kParallelThreshold = 256;

std::string pressureText(double p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", p);
    return buf;
}

}  // namespace

void PressureSweep::validate() const {
    if (!std::isfinite(start) || !std::isfinite(end) || !std::isfinite(step)) {
        throw DomainError("pressure sweep values must be finite");
    }
    if (!(start >= 0.0)) throw DomainError("pressure sweep start must be >= 0");
    if (!(end >= start)) throw DomainError("pressure sweep end must be >= start");
    if (!(step > 0.0)) throw DomainError("pressure sweep step must be > 0");
}

std::vector<double> PressureSweep::grid() const {
    validate();
    const double steps = (end - start) / step;
    const auto count = static_cast<std::size_t>(std::floor(steps + 1e-9)) + 1;
    std::vector<double> points(count);
    for (std::size_t i = 0; i < count; ++i) points[i] = start + static_cast<double>(i) * step;
    if (count > 1 && std::abs(points.back() - end) <= 1e-9 * step) points.back() = end;
    return points;
}

SweepError::SweepError(double pressure, const std::string& what)
    : DomainError("at pressure " + pressureText(pressure) + " MPa: " + what), pressure_(pressure) {}

double junctionStress(double pressure, const SpaGeometry& spa) {
    if (!(pressure >= 0.0)) throw DomainError("pressure must be non-negative");
    spa.validate();
    const double wallStress = pressure * wallStressFactor(spa.wallThickness, spa.chamberHeight);
    return 2.0 * wallStress * spa.chamberLength * spa.chamberWidth / spa.hZoneArea();
}

double junctionStretch(double pressure, const SpaGeometry& spa, const YeohMaterial& material,
                       double lambdaMax) {
    const double sigma = junctionStress(pressure, spa);
    try {
        return inverseCauchyStress(material, sigma, lambdaMax);
    } catch (const UnbracketedRootError& e) {
        throw UnbracketedRootError("pressure " + pressureText(pressure) +
                                   " MPa is out of range for material '" + material.name() +
                                   "': " + e.what());
    }
}

double adjustmentCoefficient(double wallRatio, double pressure) {
    return -2.49 * wallRatio - 6.101 * pressure + 11.457;
}

double expansionForce(double pressure, const SpaGeometry& spa, double lambdaJz,
                      double adjustmentCoeff) {
    return adjustmentCoeff * pressure * std::numbers::pi * spa.chamberLength *
           (lambdaJz * spa.junctionHeight + spa.chamberHeight + 2.0 * spa.wallThickness);
}

double restoringForce(double lambdaJz, const SpaGeometry& spa, const YeohMaterial& material) {
    return cauchyStress(material, lambdaJz) * spa.hZoneArea();
}

ActuationState spaForce(double pressure, const MyofibrilSpec& spec) {
    ActuationState s;
    s.pressure = pressure;
    s.lambdaJz = junctionStretch(pressure, spec.spa, spec.material);
    s.adjustmentCoeff = adjustmentCoefficient(spec.spa.wallRatio(), pressure);
    s.expansionForce = expansionForce(pressure, spec.spa, s.lambdaJz, s.adjustmentCoeff);
    s.restoringForce = restoringForce(s.lambdaJz, spec.spa, spec.material);
    s.spaForce = s.expansionForce - s.restoringForce;
    return s;
}

double contractionForce(ActuationState& state, const SpaGeometry& spa, double actinArc) {
    state.theta = contractionAngle(spa, state.lambdaJz, actinArc);
    state.contractionForce = state.spaForce * std::tan(state.theta);
    return state.contractionForce;
}

ActuationState evaluateState(double pressure, const MyofibrilSpec& spec) {
    spec.validate();
    ActuationState s = spaForce(pressure, spec);
    contractionForce(s, spec.spa, spec.sarcomere.actinArc);
    const double deltaHm = myosinHeightChange(spec, s.lambdaJz);
    s.r1 = actinSemiAxis(spec, deltaHm);
    s.myofibrilLength = myofibrilLength(spec, deltaHm);
    const double rest = myofibrilLength(spec, 0.0);
    s.lengthRatio = s.myofibrilLength / rest;
    s.ratioStatus = checkLengthRatio(s.myofibrilLength, rest);
    return s;
}

std::vector<ActuationState> simulateSweep(const MyofibrilSpec& spec, const PressureSweep& sweep) {
    const auto grid = sweep.grid();
    spec.validate();
    std::vector<ActuationState> states(grid.size());
    std::vector<std::exception_ptr> failures(grid.size());

    auto evaluateRange = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                states[i] = evaluateState(grid[i], spec);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };

    const std::size_t workers =
        grid.size() < kParallelThreshold ? 1 : std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1) {
        evaluateRange(0, grid.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (grid.size() + workers - 1) / workers;
        for (std::size_t begin = 0; begin < grid.size(); begin += chunk) {
            pool.emplace_back(evaluateRange, begin, std::min(grid.size(), begin + chunk));
        }
    }

    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!failures[i]) continue;
        try {
            std::rethrow_exception(failures[i]);
        } catch (const std::exception& e) {
            throw SweepError(grid[i], e.what());
        }
    }
    return states;
}

double LoadedTrial::lengthAt(double pressure) const {
    for (const auto& [p, length] : lengths) {
        if (std::abs(p - pressure) <= 1e-12) return length;
    }
    throw DataError("no length recorded at pressure " + pressureText(pressure) + " MPa for load " +
                    std::to_string(loadMass) + " g");
}

double actuationStrain(const LoadedTrial& trial, double pressure) {
    if (!(trial.restingUnloaded > 0.0)) throw DataError("unloaded resting length must be positive");
    const double loaded = trial.lengthAt(pressure);
    const double passive = trial.lengthAt(0.0);
    if (!(loaded > 0.0) || !(passive > 0.0)) throw DataError("trial lengths must be positive");
    return (loaded - passive) / trial.restingUnloaded;
}

}  // namespace apm
