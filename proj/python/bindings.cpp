#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "monolith/construct.hpp"
#include "monolith/errors.hpp"
#include "monolith/families.hpp"
#include "monolith/folog.hpp"
#include "monolith/io.hpp"
#include "monolith/lattice.hpp"
#include "monolith/report.hpp"
#include "monolith/witness.hpp"

namespace py = pybind11;
using namespace monolith;
using nlohmann::json;

namespace {

py::object to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(to_py(e));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

json from_py(const py::handle& h) { return json::parse(py::str(
    py::module_::import("json").attr("dumps")(h)).cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite-group normal structure, witness and definability toolkit";

  py::register_exception<Error>(m, "ToolkitError");

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("order", &FiniteGroup::order)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("conjugate", &FiniteGroup::conjugate)
      .def("commutator", &FiniteGroup::commutator)
      .def("power", &FiniteGroup::power)
      .def("element_order", &FiniteGroup::element_order)
      .def("exponent", &FiniteGroup::exponent)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("validate", &FiniteGroup::validate)
      .def("content_hash", &FiniteGroup::content_hash)
      .def_property_readonly("names", &FiniteGroup::names)
      .def("index_of_name",
           [](const FiniteGroup& g, const std::string& n) -> py::object {
             auto i = g.index_of_name(n);
             return i ? py::cast(*i) : py::none();
           })
      .def("to_dict",
           [](const FiniteGroup& g) { return to_py(io::group_to_json(g)); })
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group of order " + std::to_string(g.order()) + ">";
      });

  m.def("named_group", &named_group, py::arg("spec"));
  m.def("from_table", [](const std::vector<std::vector<int>>& table,
                         std::vector<std::string> names) {
    return FiniteGroup::from_table(table, std::move(names));
  }, py::arg("table"), py::arg("names") = std::vector<std::string>{});
  m.def("from_permutations", [](const std::string& text) {
    return FiniteGroup::from_permutations(io::parse_permutation_generators(text));
  }, py::arg("cycles"));

  m.def("analyze",
        [](const FiniteGroup& g) { return to_py(analysis_to_json(analyze(g))); });
  m.def("normal_closure", [](const FiniteGroup& g, int a) {
    return normal_closure(g, a).elements();
  });
  m.def("normal_subgroups", [](const FiniteGroup& g) {
    std::vector<std::vector<int>> out;
    for (const auto& n : normal_subgroups(g)) out.push_back(n.elements());
    return out;
  });
  m.def("atoms", [](const FiniteGroup& g) {
    std::vector<std::vector<int>> out;
    for (const auto& a : atoms(g)) out.push_back(a.elements());
    return out;
  });
  m.def("monolith", [](const FiniteGroup& g) -> py::object {
    auto mset = monolith::monolith(g);
    return mset ? py::cast(mset->elements()) : py::none();
  });
  m.def("is_subdirectly_irreducible", &is_subdirectly_irreducible);
  m.def("center", [](const FiniteGroup& g) { return center(g).elements(); });
  m.def("upper_central_series", [](const FiniteGroup& g) {
    auto s = upper_central_series(g);
    py::dict out;
    std::vector<std::vector<int>> levels;
    for (const auto& l : s.levels) levels.push_back(l.elements());
    out["levels"] = py::cast(levels);
    out["nilpotency_class"] =
        s.nilpotency_class ? py::cast(*s.nilpotency_class) : py::none();
    return out;
  });
  m.def("chief_factor_sizes",
        [](const FiniteGroup& g) { return chief_factor_sizes(g); });
  m.def("verify_class_identity",
        [](const FiniteGroup& g, int k) { return verify_class_identity(g, k); },
        py::arg("group"), py::arg("k"));

  m.def("minimal_witness",
        [](const FiniteGroup& g, int target, int c, int cap) -> py::object {
          auto w = minimal_witness(g, target, c, cap);
          if (!w) return py::none();
          py::dict out;
          out["term"] = to_py(term_to_json(w->term));
          out["pretty"] = w->term.pretty();
          out["params"] = py::cast(w->params);
          out["complexity"] = w->term.complexity();
          return out;
        },
        py::arg("group"), py::arg("target"), py::arg("base"),
        py::arg("max_complexity"));
  m.def("descend", [](const FiniteGroup& g, int a) {
    return to_py(chain_to_json(g, descend(g, a)));
  });
  m.def("atom_bound_check", [](const FiniteGroup& g, int c, int r) {
    return to_py(atom_report_to_json(atom_bound_check(g, c, r)));
  });

  m.def("parse", [](const std::string& text) { return folog::print(folog::parse(text)); });
  m.def("evaluate",
        [](const FiniteGroup& g, const std::string& text,
           const std::map<std::string, int>& env) {
          return folog::evaluate(g, folog::parse(text), env);
        },
        py::arg("group"), py::arg("formula"),
        py::arg("assignment") = std::map<std::string, int>{});
  m.def("defined_set",
        [](const FiniteGroup& g, const std::string& text, const std::string& var) {
          return folog::defined_set(g, folog::parse(text), var).elements();
        });
  m.def("build_phi", [](int r, int cap) { return folog::print(folog::build_phi(r, cap)); });
  m.def("build_psi",
        [](int n, int cap) { return folog::print(folog::build_psi(n, cap)); });
  m.def("si_sentence", [](int r, int cap, int psi_vars, int psi_cap) {
    return folog::print(folog::build_si_sentence(folog::build_phi(r, cap),
                                                 folog::build_psi(psi_vars, psi_cap)));
  });
  m.def("evaluate_si_semantic", &folog::evaluate_si_semantic, py::arg("group"),
        py::arg("r"), py::arg("psi_cap"));

  m.def("direct_power", [](const FiniteGroup& g, int n) {
    return construct::direct_power(g, n);
  });
  m.def("subgroup_generated",
        [](const FiniteGroup& g, const std::vector<int>& gens) {
          auto r = construct::subgroup_generated(g, gens);
          return py::make_tuple(r.group, r.embedding);
        });
  m.def("quotient", [](const FiniteGroup& g, const std::vector<int>& kernel) {
    ElementSet n(g.order());
    for (int e : kernel) n.insert(e);
    auto r = construct::quotient(g, n);
    return py::make_tuple(r.group, r.projection);
  });
  m.def("replay", [](const py::handle& recipe) {
    return construct::replay(from_py(recipe));
  });
  m.def("sample_variety_members",
        [](const std::string& spec, int max_power, long long max_order,
           int max_members, int max_tuples) {
          construct::SampleLimits lim{max_power, max_order, max_members, max_tuples};
          auto sample = construct::sample_variety_members(
              named_group(spec), construct::recipe_named(spec), lim);
          py::list out;
          for (const auto& mem : sample) {
            py::dict d;
            d["group"] = py::cast(mem.group);
            d["provenance"] = to_py(mem.provenance);
            d["analysis"] = to_py(analysis_to_json(mem.analysis));
            out.append(d);
          }
          return out;
        },
        py::arg("spec"), py::arg("max_power") = 2, py::arg("max_order") = 64,
        py::arg("max_members") = 64, py::arg("max_tuples") = 4000);
}
