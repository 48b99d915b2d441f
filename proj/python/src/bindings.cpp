// Copyright 2026 The wittext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wittext/acceptance.hpp"
#include "wittext/extend.hpp"
#include "wittext/freelie.hpp"

namespace py = pybind11;
using namespace wittext;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::object& o) {
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

int branch_of(const std::string& b) {
  if (b == "+") return 1;
  if (b == "-") return -1;
  if (b == "auto") return 0;
  throw Error(ErrorKind::BadFlag, "branch must be +, - or auto");
}

QuadScalar qs(const std::string& s) { return parse_quad(s); }

}  // namespace

PYBIND11_MODULE(_wittext, m) {
  m.doc() = "Exact extension of sl(2) weight modules to Witt and Virasoro actions";
  py::register_exception<Error>(m, "WittextError", PyExc_ValueError);

  m.def("dense", [](const std::string& anchor, const std::string& tau, int kmin, int kmax) {
    return to_py(module_to_json(make_dense(qs(anchor), qs(tau), kmin, kmax)));
  }, py::arg("anchor"), py::arg("tau"), py::arg("kmin") = -12, py::arg("kmax") = 11);
  m.def("verma", [](const std::string& lambda, int depth) {
    return to_py(module_to_json(make_verma(qs(lambda), depth)));
  }, py::arg("lam"), py::arg("depth") = 12);
  m.def("lowest", [](const std::string& lambda, int depth) {
    return to_py(module_to_json(make_lowest(qs(lambda), depth)));
  }, py::arg("lam"), py::arg("depth") = 12);
  m.def("finite", [](int n) { return to_py(module_to_json(make_finite(n))); }, py::arg("n"));
  m.def("counterexample", [](const std::string& lambda, int kmin, int kmax) {
    return to_py(module_to_json(make_counterexample(qs(lambda), kmin, kmax)));
  }, py::arg("lam"), py::arg("kmin") = -16, py::arg("kmax") = 6);

  m.def("sl2_report", [](const py::object& module) {
    return to_py(verify_sl2(module_from_json(from_py(module))).to_json());
  }, py::arg("module"));

  m.def("extend", [](const py::object& module, const std::string& side, const std::string& branch, int depth,
                     const std::string& method) {
    auto mod = std::make_shared<WeightModule>(module_from_json(from_py(module)));
    Algebra alg = parse_algebra(side);
    ExtensionOutcome o;
    if (method == "closed") o = extend_closed(mod, alg, branch_of(branch), depth);
    else if (method == "generic") o = extend_generic(mod, alg, depth);
    else throw Error(ErrorKind::BadFlag, "method must be closed or generic");
    return to_py(o.to_json(true));
  }, py::arg("module"), py::arg("side") = "gt", py::arg("branch") = "auto", py::arg("depth") = 6,
     py::arg("method") = "closed");

  m.def("verify", [](const py::object& action, int depth, bool interior) {
    return to_py(verify_bracket(action_from_json(from_py(action)), depth, interior).to_json());
  }, py::arg("action"), py::arg("depth") = 6, py::arg("interior") = false);

  m.def("glue", [](const py::object& lt, const py::object& gt, int depth, bool vir) {
    WittAction a = action_from_json(from_py(lt)), b = action_from_json(from_py(gt));
    GlueResult g = vir ? glue_vir(a, b, depth) : glue_witt(a, b, depth);
    return to_py(g.to_json());
  }, py::arg("lt"), py::arg("gt"), py::arg("depth") = 6, py::arg("vir") = false);

  m.def("certify_counterexample", [](const std::string& lambda, int kmin, int kmax) {
    return to_py(counterexample_certify(qs(lambda), kmin, kmax).to_json());
  }, py::arg("lam"), py::arg("kmin") = -16, py::arg("kmax") = 6);

  m.def("relation_dim", [](int n) { return freelie::relation_space(n).dim(); }, py::arg("n"));
  m.def("member", [](const std::string& target, const std::vector<std::string>& gens, int max_degree) {
    freelie::LieElement t = freelie::parse_relation(target);
    std::vector<freelie::LieElement> g;
    for (const auto& s : gens) g.push_back(freelie::parse_relation(s));
    freelie::IdealResult r = freelie::ideal_closure(g, t.degree(), max_degree);
    return py::dict(py::arg("member") = freelie::membership(t, r.component), py::arg("stable") = r.stable,
                    py::arg("dim") = r.component.dim());
  }, py::arg("target"), py::arg("gens"), py::arg("max_degree") = 11);

  m.def("criterion", [](int id) { return to_py(run_criterion(id).to_json(false)); }, py::arg("id"));
  m.attr("criterion_count") = kCriterionCount;
}
