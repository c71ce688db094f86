// Copyright 2026 The wwpi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

#include "wwpi/analysis.hpp"
#include "wwpi/circuit_json.hpp"
#include "wwpi/errors.hpp"
#include "wwpi/hilbert.hpp"
#include "wwpi/path_engine.hpp"
#include "wwpi/schmidt.hpp"
#include "wwpi/verify.hpp"

namespace py = pybind11;
using namespace wwpi;

namespace {

std::map<std::string, double> as_dict(const OutcomeDistribution& d) {
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        out[d.key(i).to_string()] = d.probability(i);
    }
    return out;
}

Engine engine_from(const std::string& name) {
    if (name == "path") return Engine::Path;
    if (name == "oracle") return Engine::Oracle;
    throw DomainError("engine must be 'path' or 'oracle', got '" + name + "'");
}

py::dict rotation_dict(const BasisRotation& r) {
    py::dict d;
    d["alpha"] = r.alpha();
    d["beta"] = r.beta();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Which-way path-integral simulator";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
    py::register_exception<SizeError>(m, "SizeError", base.ptr());
    py::register_exception<NormalizationError>(m, "NormalizationError", base.ptr());
    py::register_exception<TopologyError>(m, "TopologyError", base.ptr());
    py::register_exception<DegenerateDistributionError>(m, "DegenerateDistributionError", base.ptr());
    py::register_exception<MaxEntangledError>(m, "MaxEntangledError", base.ptr());
    py::register_exception<ParametrizationError>(m, "ParametrizationError", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

    py::class_<BlochAngles>(m, "BlochAngles")
        .def(py::init<double, double>(), py::arg("theta"), py::arg("phi"))
        .def_property_readonly("theta", &BlochAngles::theta)
        .def_property_readonly("phi", &BlochAngles::phi)
        .def("__repr__", [](const BlochAngles& b) {
            return "BlochAngles(theta=" + std::to_string(b.theta()) + ", phi=" + std::to_string(b.phi()) + ")";
        });

    py::class_<SchmidtForm>(m, "SchmidtForm")
        .def(py::init<double, double, double>(), py::arg("A"), py::arg("B"), py::arg("delta") = 0.0)
        .def_property_readonly("A", &SchmidtForm::A)
        .def_property_readonly("B", &SchmidtForm::B)
        .def_property_readonly("delta", &SchmidtForm::delta);

    py::class_<OutcomeDistribution>(m, "OutcomeDistribution")
        .def_property_readonly("num_qubits", &OutcomeDistribution::num_qubits)
        .def_property_readonly("raw_norm", &OutcomeDistribution::raw_norm)
        .def("total", &OutcomeDistribution::total)
        .def("probability", py::overload_cast<std::string_view>(&OutcomeDistribution::probability, py::const_),
             py::arg("label"))
        .def("as_dict", &as_dict);

    m.def(
        "two_qubit",
        [](const SchmidtForm& sf, const BlochAngles& m1, const BlochAngles& m2, const std::string& engine) {
            return run_engine(TwoQubitScenario{sf, m1, m2}, engine_from(engine));
        },
        py::arg("state"), py::arg("m1"), py::arg("m2"), py::arg("engine") = "path");
    m.def(
        "ghz",
        [](const BlochAngles& m1, const BlochAngles& m2, const BlochAngles& m3, const std::string& engine) {
            return run_engine(GhzScenario{m1, m2, m3}, engine_from(engine));
        },
        py::arg("m1"), py::arg("m2"), py::arg("m3"), py::arg("engine") = "path");
    m.def(
        "single_qubit",
        [](Complex a, Complex b, const BlochAngles& s) {
            return outcome_distribution(build_single_qubit_circuit(a, b, s));
        },
        py::arg("a"), py::arg("b"), py::arg("m"));
    m.def(
        "simulate_circuit_json", [](const std::string& text) { return outcome_distribution(circuit_from_json(text)); },
        py::arg("text"));
    m.def(
        "history_count",
        [](const SchmidtForm& sf, const BlochAngles& m1, const BlochAngles& m2) {
            return enumerate_histories(build_two_qubit_circuit(sf, m1, m2)).size();
        },
        py::arg("state"), py::arg("m1"), py::arg("m2"));

    m.def("correlation", &correlation, py::arg("dist"));
    m.def("ghz_parity", &ghz_parity, py::arg("dist"));
    m.def(
        "chsh_search",
        [](const SchmidtForm& sf, const std::string& engine) { return chsh_search(sf, engine_from(engine)).best_abs_s; },
        py::arg("state"), py::arg("engine") = "path");

    m.def(
        "schmidt",
        [](Complex a, Complex b, Complex c, Complex d) {
            const auto dec = to_schmidt_form(GeneralTwoQubit(a, b, c, d));
            py::dict out;
            out["A"] = dec.form.A();
            out["B"] = dec.form.B();
            out["delta"] = dec.form.delta();
            out["maximally_entangled"] = dec.maximally_entangled;
            out["qubit1"] = rotation_dict(dec.first);
            out["qubit2"] = rotation_dict(dec.second);
            out["residual_00"] = dec.residual_00;
            out["residual_11"] = dec.residual_11;
            if (dec.params) {
                out["gamma"] = dec.params->gamma;
                out["chi1"] = dec.params->chi1;
                out["chi2"] = dec.params->chi2;
            }
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));

    m.def(
        "verify",
        [](const std::string& suite, std::size_t trials, std::uint64_t seed) {
            const auto s = parse_suite(suite);
            if (!s) throw DomainError("unknown suite '" + suite + "'");
            const auto r = run_verify(*s, trials, seed);
            return py::make_tuple(r.passed(), render(r));
        },
        py::arg("suite"), py::arg("trials") = 1000, py::arg("seed") = 0);
}
