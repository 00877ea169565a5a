#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "l2lab/auxfun.hpp"
#include "l2lab/product.hpp"
#include "l2lab/suita.hpp"
#include "l2lab/suites.hpp"

namespace py = pybind11;
using namespace l2lab;

namespace {

struct PyDomain {
    DomainPtr d;
};

py::dict capacity_dict(const PyDomain& dom, const cvec& z0) {
    auto cap = log_capacity(*dom.d, z0);
    py::dict out;
    out["value"] = cap.value;
    out["error_estimate"] = cap.errorEstimate;
    return out;
}

py::dict suita_dict(const PyDomain& dom, cplx z0, int m, double alpha, int truncation) {
    auto rep = suita_report(*dom.d, z0, m, alpha, truncation);
    py::dict out;
    out["pi_B"] = rep.piB;
    out["rhs"] = rep.rhs;
    out["gap"] = rep.gap;
    out["error_bound"] = rep.errorBound;
    out["capacity"] = rep.capacity;
    out["truncation"] = rep.truncation;
    return out;
}

py::dict locus_dict(double R, int m, double alpha, int radialGrid, int truncation) {
    auto scan = equality_locus_scan(R, m, alpha, radialGrid, truncation);
    py::dict out;
    out["detected"] = scan.detected;
    out["predicted"] = scan.predicted;
    out["flagged"] = scan.flagged;
    out["min_gap"] = scan.minGap;
    return out;
}

py::dict curve_dict(const std::vector<cplx>& coeffs, int m, double multiplier,
                    const std::vector<double>& grid) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg < 0) throw Error("InvalidParameter", "empty coefficient list");
    auto s = build_space(make_polydisc({1.0}), WeightSpec::zero(),
                         BasisSpec::monomial(1, std::max(deg, m + 1)));
    std::vector<cplx> f(s.size(), cplx(0.0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) f[i] = coeffs[i];
    auto p = make_pole(s.domain, {cplx(0.0)}, multiplier);
    auto curve = minimal_integral_curve(s, *p, f, m, grid);
    auto rep = concavity_report(curve);
    py::dict out;
    out["t"] = curve.t;
    out["I"] = curve.I;
    out["max_concavity_violation"] = rep.maxViolation;
    out["numerically_linear"] = rep.isNumericallyLinear;
    return out;
}

py::dict kappa_dict(double a) {
    auto kr = kappa_constant(a);
    py::dict out;
    out["kappa"] = kr.kappa;
    out["bound_value"] = kr.boundValue;
    out["bound_target"] = kr.boundTarget;
    out["bound_holds"] = kr.boundHolds;
    return out;
}

std::string run_suite_json(const std::string& suite, const std::string& configJson) {
    auto cfg = configJson.empty() ? nlohmann::ordered_json::object()
                                  : nlohmann::ordered_json::parse(configJson);
    auto rep = run_suite(suite, cfg);
    return report_json(rep, false).dump(2);
}

}  // namespace

PYBIND11_MODULE(_l2lab, mod) {
    mod.doc() = "weighted Bergman spaces, Green functions, and minimal L2 extensions";

    py::register_exception<Error>(mod, "L2LabError");

    py::class_<PyDomain>(mod, "Domain")
        .def_static("unit_ball", [](int n) { return PyDomain{make_unit_ball(n)}; }, py::arg("n"))
        .def_static("disc", [] { return PyDomain{make_polydisc({1.0})}; })
        .def_static("polydisc",
                    [](std::vector<double> r) { return PyDomain{make_polydisc(std::move(r))}; },
                    py::arg("radii"))
        .def_static("annulus", [](double R) { return PyDomain{make_annulus(R)}; }, py::arg("R"))
        .def_static("product",
                    [](const PyDomain& a, const PyDomain& b) {
                        return PyDomain{make_product(a.d, b.d)};
                    })
        .def("contains", [](const PyDomain& d, const cvec& z) { return contains(*d.d, z); })
        .def("volume", [](const PyDomain& d) {
            return volume(*d.d, VolumeMethod::Exact).value;
        });

    mod.def("green", [](const PyDomain& d, const cvec& z0, const cvec& z) {
        return green_eval(*d.d, z0, z);
    }, py::arg("domain"), py::arg("pole"), py::arg("z"));
    mod.def("log_capacity", &capacity_dict, py::arg("domain"), py::arg("z0"));
    mod.def("azukawa", [](const PyDomain& d, const cvec& z, const cvec& X) {
        return azukawa_metric(*d.d, z, X);
    }, py::arg("domain"), py::arg("z"), py::arg("X"));
    mod.def("indicatrix_volume", [](const PyDomain& d, const cvec& z, int directions) {
        return indicatrix_volume(*d.d, z, directions).volume;
    }, py::arg("domain"), py::arg("z"), py::arg("directions") = 256);
    mod.def("kernel_diagonal", [](const PyDomain& d, const cvec& z, int truncation) {
        auto s = build_space(d.d, WeightSpec::zero(),
                             d.d->kind == DomainKind::Annulus
                                 ? BasisSpec::laurent(-truncation, truncation)
                                 : BasisSpec::monomial(d.d->n, truncation));
        return kernel_at(s, z, z).diagonal;
    }, py::arg("domain"), py::arg("z"), py::arg("truncation") = 80);

    mod.def("suita_report", &suita_dict, py::arg("domain"), py::arg("z0"), py::arg("m") = 0,
            py::arg("alpha") = 0.0, py::arg("truncation") = 200);
    mod.def("equality_locus", &locus_dict, py::arg("R"), py::arg("m"), py::arg("alpha") = 0.0,
            py::arg("radial_grid") = 96, py::arg("truncation") = 200);
    mod.def("kernel_deterioration", [](cplx z0, const std::vector<double>& tgrid, int trunc) {
        return kernel_deterioration(z0, tgrid, trunc);
    }, py::arg("z0"), py::arg("tgrid"), py::arg("truncation") = 160);

    mod.def("minimal_integral_curve", &curve_dict, py::arg("coefficients"), py::arg("m"),
            py::arg("multiplier"), py::arg("grid"),
            "Minimal-extension integral curve on the unit disc with a pole at 0");

    mod.def("kappa_constant", &kappa_dict, py::arg("a"));
    mod.def("demext_constant", &demext_constant, py::arg("m"), py::arg("p"), py::arg("eps"));

    mod.def("run_suite", &run_suite_json, py::arg("suite"), py::arg("config_json") = "",
            "Run an experiment suite and return the JSON report as a string");
}
