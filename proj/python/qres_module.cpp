#include "qres/errors.hpp"
#include "qres/oracles.hpp"
#include "qres/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qres;

namespace {

WeightStrategy weights_from(const py::object& choice) {
    if (choice.is_none()) return WeightStrategy::auto_newton();
    if (py::isinstance<py::str>(choice)) {
        std::string s = choice.cast<std::string>();
        if (s == "classical") return WeightStrategy::classical();
        throw py::value_error("weights: expected None, 'classical' or a list of (p,q) pairs");
    }
    std::vector<std::pair<long, long>> script;
    for (auto item : choice.cast<py::iterable>()) {
        auto pq = item.cast<std::pair<long, long>>();
        script.push_back(pq);
    }
    return WeightStrategy::from_script(script);
}

std::string run_curve_json(const std::string& poly, bool verify, const py::object& weights) {
    JobConfig job;
    job.mode = JobConfig::Mode::Curve;
    job.input = WPoly::parse(poly);
    job.verify = verify;
    job.weights = weights_from(weights);
    return run(job).to_json();
}

std::string run_surface_json(const py::object& poly, const py::object& germs, long m, long k,
                             bool verify, const py::object& weights) {
    JobConfig job;
    job.mode = JobConfig::Mode::Surface;
    if (!poly.is_none()) job.input = WPoly::parse(poly.cast<std::string>());
    if (!germs.is_none()) {
        int idx = 0;
        for (auto item : germs.cast<py::iterable>()) {
            JobConfig::GermEntry g;
            g.germ = WPoly::parse(item.cast<std::string>());
            g.label = "germ " + std::to_string(++idx);
            job.germs.push_back(std::move(g));
        }
    }
    job.m = m;
    job.k = k;
    job.verify = verify;
    job.weights = weights_from(weights);
    return run(job).to_json();
}

} // namespace

PYBIND11_MODULE(_qres, mod) {
    mod.doc() = "embedded Q-resolutions of plane-curve germs and Yomdin-Le surface "
                "singularities; exact characteristic polynomials of the monodromy";

    py::register_exception<ScopeError>(mod, "ScopeError");
    py::register_exception<VerificationError>(mod, "VerificationError");

    mod.def("ext_gcd",
            [](long a, long b) {
                auto [g, u, v] = ext_gcd(Int(a), Int(b));
                return py::make_tuple(to_long(g), to_long(u), to_long(v));
            },
            py::arg("a"), py::arg("b"), "extended gcd: returns (g, u, v) with g = u a + v b");

    mod.def("w_order",
            [](const std::string& poly, long p, long q) {
                return to_long(w_order(WPoly::parse(poly), p, q));
            },
            py::arg("poly"), py::arg("p"), py::arg("q"),
            "minimal (p,q)-weighted order of the monomials");

    mod.def("newton_weights",
            [](const std::string& poly) { return newton_weights(WPoly::parse(poly)); },
            py::arg("poly"), "primitive normal of the chosen compact Newton face");

    mod.def("milnor_jacobian",
            [](const std::string& poly) { return to_long(milnor_jacobian(WPoly::parse(poly))); },
            py::arg("poly"), "Milnor number as the Jacobian-algebra dimension");

    mod.def("classical_charpoly",
            [](const std::string& poly) { return classical_charpoly(WPoly::parse(poly)).str(); },
            py::arg("poly"),
            "characteristic polynomial from the classical (1,1)-blow-up resolution");

    mod.def("curve_json", &run_curve_json, py::arg("poly"), py::arg("verify") = false,
            py::arg("weights") = py::none(),
            "resolve a plane-curve germ; returns the result document as a JSON string");

    mod.def("surface_json", &run_surface_json, py::arg("poly") = py::none(),
            py::arg("germs") = py::none(), py::arg("m") = 0, py::arg("k") = 1,
            py::arg("verify") = false, py::arg("weights") = py::none(),
            "resolve a surface germ f(x,y,z) or a germ list; returns JSON");

    mod.attr("__version__") = "0.1.0";
}
