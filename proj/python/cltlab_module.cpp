#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cltlab/config.hpp"
#include "cltlab/constructors.hpp"
#include "cltlab/errors.hpp"
#include "cltlab/groupspec.hpp"
#include "cltlab/report_json.hpp"
#include "cltlab/subgroups.hpp"
#include "cltlab/verifier.hpp"

namespace py = pybind11;
using namespace cltlab;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const Json& item : j) out.append(json_to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

GroupPtr as_group(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return build_group_spec(obj.cast<std::string>());
  return obj.cast<GroupPtr>();
}

}  // namespace

PYBIND11_MODULE(_cltlab, m) {
  m.doc() = "exact engine for groups of order p*q^3 and the converse of Lagrange's theorem";

  py::register_exception<Error>(m, "CltlabError");

  py::class_<FiniteGroup, GroupPtr>(m, "Group")
      .def_property_readonly("order", [](const FiniteGroup& g) { return g.n; })
      .def_property_readonly("spec_tag", [](const FiniteGroup& g) { return g.spec_tag; })
      .def("label", [](const FiniteGroup& g, int i) { return g.labels.at(i); })
      .def("op", [](const FiniteGroup& g, int a, int b) { return g.op(a, b); })
      .def("inverse", [](const FiniteGroup& g, int a) { return g.inverse(a); })
      .def("element_order", [](const FiniteGroup& g, int x) { return element_order(g, x); })
      .def("is_abelian", [](const FiniteGroup& g) { return is_abelian(g); })
      .def("exponent", [](const FiniteGroup& g) { return exponent(g); })
      .def("center_order",
           [](const GroupPtr& g) { return center(*g, g).order(); })
      .def("validate",
           [](const FiniteGroup& g) {
             ValidationReport rep = validate_group(g);
             py::dict out;
             out["ok"] = rep.ok();
             out["violations"] = rep.violations;
             out["associativity_sampled"] = rep.associativity_sampled;
             out["triples_checked"] = rep.triples_checked;
             return out;
           })
      .def("__len__", [](const FiniteGroup& g) { return g.n; })
      .def("__repr__", [](const FiniteGroup& g) {
        return "<cltlab.Group " + g.spec_tag + " of order " + std::to_string(g.n) + ">";
      });

  m.def("build", &build_group_spec, py::arg("spec"),
        "Build a group from its spec string, e.g. 'sl23' or 'zq3xzp:7,2'.");

  m.def(
      "clt_report",
      [](const py::object& g, bool lattice) {
        return json_to_py(to_json(clt_report(as_group(g), lattice)));
      },
      py::arg("group"), py::arg("lattice") = false,
      "Divisor coverage and Sylow statistics for a Group or spec string.");

  m.def(
      "subgroup_orders",
      [](const py::object& g) {
        SubgroupLattice lat = all_subgroups(as_group(g));
        py::dict out;
        for (const auto& [order, count] : lat.by_order) out[py::int_(order)] = count;
        return out;
      },
      py::arg("group"), "Complete subgroup census: {order: count}.");

  m.def(
      "count_subgroups_of_order",
      [](const py::object& g, int d) { return count_subgroups_of_order(as_group(g), d); },
      py::arg("group"), py::arg("order"));

  m.def(
      "has_subgroup_of_order",
      [](const py::object& g, int d) { return has_subgroup_of_order(as_group(g), d); },
      py::arg("group"), py::arg("order"));

  m.def(
      "automorphism_count",
      [](const py::object& g) { return automorphism_count(*as_group(g)); }, py::arg("group"));

  m.def(
      "is_isomorphic",
      [](const py::object& a, const py::object& b) {
        return is_isomorphic(*as_group(a), *as_group(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "m_set_report",
      [](const py::object& g, int p, int q) {
        return json_to_py(to_json(verify_m_set_claim(as_group(g), p, q)));
      },
      py::arg("group"), py::arg("p"), py::arg("q"));

  m.def(
      "predict", [](int p, int q) { return json_to_py(to_json(predict(p, q))); }, py::arg("p"),
      py::arg("q"), "Number-theoretic prediction: does a non-CLT group of order p*q^3 exist?");

  m.def(
      "verify_pair",
      [](int p, int q, bool exhaustive) {
        return json_to_py(to_json(verify_pair(p, q, exhaustive)));
      },
      py::arg("p"), py::arg("q"), py::arg("exhaustive") = true,
      "Construct (or enumerate) the groups of order p*q^3 and compare against the prediction.");

  m.def(
      "aut_formulas", [](int q) { return json_to_py(to_json(verify_aut_formulas(q))); },
      py::arg("q"), "Brute-force automorphism counts of the order-q^3 groups vs closed forms.");

  m.def(
      "corollary",
      [](const std::string& id, int max_p, int max_q) {
        return json_to_py(to_json(verify_corollary(id, max_p, max_q)));
      },
      py::arg("id"), py::arg("max_p") = 13, py::arg("max_q") = 3);

  m.def(
      "scan",
      [](int max_p, int max_q, bool exhaustive, int jobs) {
        return json_to_py(to_json(scan(max_p, max_q, exhaustive, jobs)));
      },
      py::arg("max_p") = 13, py::arg("max_q") = 3, py::arg("exhaustive") = true,
      py::arg("jobs") = 1);

  m.def("order24_catalog", [] {
    py::list out;
    for (const GroupPtr& g : order24_catalog()) out.append(g);
    return out;
  });

  m.def(
      "all_pq3_groups",
      [](int p, int q) {
        py::list out;
        for (const GroupPtr& g : all_pq3_groups(p, q)) out.append(g);
        return out;
      },
      py::arg("p"), py::arg("q"),
      "All groups of order p*q^3 up to isomorphism (normal-Sylow enumeration).");

  m.def("max_order", &max_order);
  m.def("set_max_order", &set_max_order, py::arg("bound"));
  m.attr("__version__") = kToolVersion;
}
