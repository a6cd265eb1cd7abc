#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apm/actuation.hpp"
#include "apm/config.hpp"
#include "apm/elliptic.hpp"
#include "apm/errors.hpp"
#include "apm/geometry.hpp"
#include "apm/material.hpp"
#include "apm/validation.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

apm::Curve toCurve(const std::vector<std::pair<double, double>>& pts, const std::string& label) {
    std::vector<apm::Point> points;
    points.reserve(pts.size());
    for (const auto& [x, y] : pts) points.push_back({x, y});
    return apm::Curve(std::move(points), label);
}

std::vector<apm::ValuePair> zipPairs(const std::vector<double>& reference,
                                     const std::vector<double>& model) {
    if (reference.size() != model.size()) {
        throw apm::DomainError("reference and model must have the same length");
    }
    std::vector<apm::ValuePair> pairs;
    for (std::size_t i = 0; i < reference.size(); ++i) pairs.emplace_back(reference[i], model[i]);
    return pairs;
}

}  // namespace

PYBIND11_MODULE(_apm, m) {
    m.doc() = "Analytical model of artificial pneumatic myofibrils";

    auto domainError = py::register_exception<apm::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<apm::UnbracketedRootError>(m, "UnbracketedRootError", domainError.ptr());
    py::register_exception<apm::DataError>(m, "DataError", PyExc_ValueError);

    m.attr("DEFAULT_LAMBDA_MAX") = apm::kDefaultLambdaMax;

    // material
    py::class_<apm::YeohMaterial>(m, "YeohMaterial")
        .def(py::init<std::string, double, double, double, double, double>(), "name"_a, "c1"_a,
             "c2"_a = 0.0, "c3"_a = 0.0, "density"_a = 0.0, "lambda_max"_a = apm::kDefaultLambdaMax)
        .def_property_readonly("name", &apm::YeohMaterial::name)
        .def_property_readonly("c1", &apm::YeohMaterial::c1)
        .def_property_readonly("c2", &apm::YeohMaterial::c2)
        .def_property_readonly("c3", &apm::YeohMaterial::c3)
        .def_property_readonly("density", &apm::YeohMaterial::density)
        .def("__repr__", [](const apm::YeohMaterial& mat) {
            return "YeohMaterial('" + mat.name() + "', c1=" + std::to_string(mat.c1()) +
                   ", c2=" + std::to_string(mat.c2()) + ", c3=" + std::to_string(mat.c3()) + ")";
        });

    m.def("builtin_material", &apm::builtinMaterial, "name"_a, py::return_value_policy::copy);
    m.def("builtin_materials", [] {
        const auto table = apm::builtinMaterials();
        return std::vector<apm::YeohMaterial>(table.begin(), table.end());
    });
    m.def("strain_energy", &apm::strainEnergy, "material"_a, "stretch"_a);
    m.def("cauchy_stress", &apm::cauchyStress, "material"_a, "stretch"_a);
    m.def("inverse_cauchy_stress", &apm::inverseCauchyStress, "material"_a, "stress"_a,
          "lambda_max"_a = apm::kDefaultLambdaMax);
    m.def("wall_stress_factor", &apm::wallStressFactor, "t_w"_a, "h_ch"_a);
    m.def("is_thin_walled", &apm::isThinWalled, "t_w"_a, "h_ch"_a);

    // geometry
    py::class_<apm::SpaGeometry>(m, "SpaGeometry")
        .def(py::init([](double tw, double ach, double bch, double hch, double hjz, double ahz,
                         double bhz) {
                 apm::SpaGeometry g{tw, ach, bch, hch, hjz, ahz, bhz};
                 g.validate();
                 return g;
             }),
             "t_w"_a, "a_ch"_a, "b_ch"_a, "h_ch"_a, "h_jz"_a, "a_hz"_a, "b_hz"_a)
        .def_readwrite("t_w", &apm::SpaGeometry::wallThickness)
        .def_readwrite("a_ch", &apm::SpaGeometry::chamberLength)
        .def_readwrite("b_ch", &apm::SpaGeometry::chamberWidth)
        .def_readwrite("h_ch", &apm::SpaGeometry::chamberHeight)
        .def_readwrite("h_jz", &apm::SpaGeometry::junctionHeight)
        .def_readwrite("a_hz", &apm::SpaGeometry::hZoneLength)
        .def_readwrite("b_hz", &apm::SpaGeometry::hZoneWidth)
        .def_property_readonly("wall_ratio", &apm::SpaGeometry::wallRatio);

    py::class_<apm::SarcomereDesign>(m, "SarcomereDesign")
        .def_readonly("a_band", &apm::SarcomereDesign::aBand)
        .def_readonly("i_band", &apm::SarcomereDesign::iBand)
        .def_readonly("actin_arc", &apm::SarcomereDesign::actinArc)
        .def_readonly("rest_radius", &apm::SarcomereDesign::restRadius);

    py::class_<apm::SarcomereGeometry>(m, "SarcomereGeometry")
        .def(py::init([](double a, double i, double l, double hm, double hs, int junctions) {
                 apm::SarcomereGeometry g{a, i, l, hm, hs, junctions};
                 g.validate();
                 return g;
             }),
             "a_band"_a, "i_band"_a, "actin_arc"_a, "myosin_height"_a,
             "sarcomere_height"_a = 0.0, "junctions_per_myosin"_a = 2)
        .def_readwrite("a_band", &apm::SarcomereGeometry::aBand)
        .def_readwrite("i_band", &apm::SarcomereGeometry::iBand)
        .def_readwrite("actin_arc", &apm::SarcomereGeometry::actinArc)
        .def_readwrite("myosin_height", &apm::SarcomereGeometry::myosinHeight)
        .def_readwrite("sarcomere_height", &apm::SarcomereGeometry::sarcomereHeight)
        .def_readwrite("junctions_per_myosin", &apm::SarcomereGeometry::junctionsPerMyosin);

    py::class_<apm::MyofibrilSpec>(m, "MyofibrilSpec")
        .def(py::init([](int n, const apm::SarcomereGeometry& s, const apm::SpaGeometry& g,
                         const apm::YeohMaterial& mat) {
                 apm::MyofibrilSpec spec{n, s, g, mat};
                 spec.validate();
                 return spec;
             }),
             "n"_a, "sarcomere"_a, "spa"_a, "material"_a)
        .def_readonly("n", &apm::MyofibrilSpec::n)
        .def_readonly("sarcomere", &apm::MyofibrilSpec::sarcomere)
        .def_readonly("spa", &apm::MyofibrilSpec::spa)
        .def_readonly("material", &apm::MyofibrilSpec::material)
        .def("design_warnings", &apm::MyofibrilSpec::designWarnings);

    m.def("design_from_a_band", &apm::designFromABand, "a_band"_a);
    m.def("complete_sarcomere", &apm::completeSarcomere, "design"_a, "spa"_a,
          "junctions_per_myosin"_a = 2);
    m.def("myosin_height_bounds", [](double a, double tw, double hch) {
        const auto b = apm::myosinHeightBounds(a, tw, hch);
        return std::pair{b.low, b.high};
    }, "a_band"_a, "t_w"_a, "h_ch"_a);
    m.def("resting_length", &apm::restingLength, "spec"_a);
    m.def("check_length_ratio", [](double current, double resting) {
        return std::string(apm::toString(apm::checkLengthRatio(current, resting)));
    }, "current"_a, "resting"_a);
    m.def("complete_elliptic_e", &apm::completeEllipticE, "k"_a);
    m.def("semi_ellipse_arc_length", &apm::semiEllipseArcLength, "r1"_a, "r2"_a);
    m.def("solve_major_axis", &apm::solveMajorAxis, "arc_length"_a, "minor_diameter"_a);
    m.def("myofibril_length", &apm::myofibrilLength, "spec"_a, "delta_hm"_a);
    m.def("contraction_angle", &apm::contractionAngle, "spa"_a, "lambda_jz"_a, "actin_arc"_a);

    // actuation
    py::class_<apm::ActuationState>(m, "ActuationState")
        .def_readonly("pressure", &apm::ActuationState::pressure)
        .def_readonly("lambda_jz", &apm::ActuationState::lambdaJz)
        .def_readonly("c_m", &apm::ActuationState::adjustmentCoeff)
        .def_readonly("f_e", &apm::ActuationState::expansionForce)
        .def_readonly("f_r", &apm::ActuationState::restoringForce)
        .def_readonly("f_spa", &apm::ActuationState::spaForce)
        .def_readonly("theta", &apm::ActuationState::theta)
        .def_readonly("f_contr", &apm::ActuationState::contractionForce)
        .def_readonly("r1", &apm::ActuationState::r1)
        .def_readonly("l_mf", &apm::ActuationState::myofibrilLength)
        .def_readonly("length_ratio", &apm::ActuationState::lengthRatio)
        .def_property_readonly("ratio_flag", [](const apm::ActuationState& s) {
            return std::string(apm::toString(s.ratioStatus));
        });

    m.def("junction_stretch", &apm::junctionStretch, "pressure"_a, "spa"_a, "material"_a,
          "lambda_max"_a = apm::kDefaultLambdaMax);
    m.def("adjustment_coefficient", &apm::adjustmentCoefficient, "wall_ratio"_a, "pressure"_a);
    m.def("expansion_force", &apm::expansionForce, "pressure"_a, "spa"_a, "lambda_jz"_a, "c_m"_a);
    m.def("restoring_force", &apm::restoringForce, "lambda_jz"_a, "spa"_a, "material"_a);
    m.def("spa_force", &apm::spaForce, "pressure"_a, "spec"_a);
    m.def("evaluate_state", &apm::evaluateState, "pressure"_a, "spec"_a);
    m.def("simulate_sweep", [](const apm::MyofibrilSpec& spec, double start, double end, double step) {
        return apm::simulateSweep(spec, apm::PressureSweep{start, end, step});
    }, "spec"_a, "start"_a, "end"_a, "step"_a);
    m.def("pressure_grid", [](double start, double end, double step) {
        return apm::PressureSweep{start, end, step}.grid();
    }, "start"_a, "end"_a, "step"_a);
    m.def("actuation_strain", [](const std::vector<std::pair<double, double>>& lengths,
                                 double restingUnloaded, double pressure) {
        apm::LoadedTrial trial{0.0, lengths, restingUnloaded};
        return apm::actuationStrain(trial, pressure);
    }, "lengths"_a, "resting_unloaded"_a, "pressure"_a);

    // validation
    m.def("discrete_frechet", [](const std::vector<std::pair<double, double>>& a,
                                 const std::vector<std::pair<double, double>>& b) {
        return apm::discreteFrechet(toCurve(a, "a"), toCurve(b, "b"));
    }, "a"_a, "b"_a);
    m.def("normalized_frechet", [](const std::vector<std::pair<double, double>>& model,
                                   const std::vector<std::pair<double, double>>& reference) {
        return apm::normalizedFrechet(toCurve(model, "model"), toCurve(reference, "reference"));
    }, "model"_a, "reference"_a);
    m.def("r_squared", [](const std::vector<double>& reference, const std::vector<double>& model) {
        return apm::rSquared(zipPairs(reference, model));
    }, "reference"_a, "model"_a);
    m.def("qq_pairs", [](const std::vector<double>& a, const std::vector<double>& b, int k) {
        return apm::qqPairs(a, b, k);
    }, "a"_a, "b"_a, "k"_a);

    // config
    m.def("load_spec", [](const std::string& path) { return apm::loadRunConfig(path).spec(); },
          "path"_a);
}
