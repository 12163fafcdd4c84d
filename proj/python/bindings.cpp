#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cactop/decompose.hpp"
#include "cactop/enumerate.hpp"
#include "cactop/hochschild.hpp"
#include "cactop/io.hpp"
#include "cactop/nondeg.hpp"
#include "cactop/suites.hpp"
#include "cactop/term.hpp"

namespace py = pybind11;
using namespace cactop;

namespace {

py::list results_to_py(const std::vector<SuiteResult>& rs) {
  py::list out;
  for (const auto& r : rs) {
    py::dict d;
    d["name"] = r.name;
    d["checks"] = r.checks;
    d["failures"] = r.failures;
    d["ok"] = r.ok();
    out.append(d);
  }
  return out;
}

FiniteDGA builtin_dga(const std::string& name) {
  if (name == "rationals") return dga_rationals();
  if (name == "dual_numbers") return dga_dual_numbers();
  if (name == "truncated") return dga_truncated();
  throw std::invalid_argument("unknown algebra '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_cactop, m) {
  m.doc() = "Cactus operad workbench bindings";

  m.def("count_cacti", [](const std::string& profile, bool framed) {
    return enumerate_cacti(Profile::parse(profile), framed).size();
  }, py::arg("profile"), py::arg("framed") = false);

  m.def("enumerate_json", [](const std::string& profile, bool framed) {
    auto out = Json::array();
    for (const auto& x : enumerate_cacti(Profile::parse(profile), framed)) out.push_back(cactus_to_json(x));
    return out.dump();
  }, py::arg("profile"), py::arg("framed") = false);

  m.def("normalize", [](const std::string& term) {
    return print_term(*decompose(evaluate(*parse_term(term))));
  }, py::arg("term"));

  m.def("cactus_dot", [](const std::string& term) {
    return cactus_to_dot(evaluate(*parse_term(term)), term);
  }, py::arg("term"));

  m.def("betti", [](int r, bool framed) {
    return NondegComplex(r, framed).betti();
  }, py::arg("r"), py::arg("framed") = false);

  m.def("verify_relations", [](int bound) {
    return results_to_py({suite_relations(bound)});
  }, py::arg("bound") = 4);

  m.def("verify_bv", [] { return results_to_py({suite_bv()}); });

  m.def("hochschild_suite", [](const std::string& algebra, int samples, unsigned long long seed) {
    Rng rng(seed);
    return results_to_py(hochschild_suite(builtin_dga(algebra), rng, samples));
  }, py::arg("algebra") = "dual_numbers", py::arg("samples") = 20, py::arg("seed") = 1);

  m.def("hochschild_suite_json", [](const std::string& dga_json, int samples, unsigned long long seed) {
    Rng rng(seed);
    return results_to_py(hochschild_suite(FiniteDGA::from_json(dga_json), rng, samples));
  }, py::arg("dga_json"), py::arg("samples") = 20, py::arg("seed") = 1);
}
