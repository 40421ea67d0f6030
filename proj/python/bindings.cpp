#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mealy/catalog.hpp"
#include "mealy/element.hpp"
#include "mealy/error.hpp"
#include "mealy/finiteness.hpp"
#include "mealy/io.hpp"
#include "mealy/orbits.hpp"
#include "mealy/report.hpp"
#include "mealy/semigroup.hpp"

namespace py = pybind11;
using namespace mealy;

namespace {
  // State words cross the boundary as lists of state indices.
  StateWord sw(std::vector<StateIndex> const& states) {
    return StateWord{states};
  }

  std::vector<StateWord> sws(std::vector<std::vector<StateIndex>> const& gens) {
    std::vector<StateWord> out;
    for (auto const& g : gens) {
      out.push_back(sw(g));
    }
    return out;
  }

  std::vector<StateWord> gens_or_all(MealyAutomaton const& m,
                                     std::optional<std::vector<std::vector<StateIndex>>> const& gens) {
    return gens ? sws(*gens) : parse_generators(m, "");
  }
}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mealy automaton semigroups: actions, orbits and finiteness";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError",
                                             PyExc_RuntimeError);

  py::class_<MealyAutomaton>(m, "MealyAutomaton")
      .def_property_readonly(
          "alphabet", [](MealyAutomaton const& a) { return a.alphabet().names(); })
      .def_property_readonly("states", &MealyAutomaton::state_names)
      .def_property_readonly("num_states", &MealyAutomaton::num_states)
      .def_property_readonly("num_letters", &MealyAutomaton::num_letters)
      .def("step",
           [](MealyAutomaton const& a, StateIndex q, Letter x) {
             auto t = step(a, q, x);
             return std::make_pair(t.output, t.next);
           })
      .def("state_index",
           [](MealyAutomaton const& a, std::string const& name) {
             return a.state_index(name);
           })
      .def("parse_word",
           [](MealyAutomaton const& a, std::string const& text) {
             return parse_word(a.alphabet(), text);
           })
      .def("format_word",
           [](MealyAutomaton const& a, Word const& w) {
             return format_word(a.alphabet(), w);
           })
      .def("parse_stateword",
           [](MealyAutomaton const& a, std::string const& text) {
             return parse_stateword(a, text).states;
           })
      .def("to_json", [](MealyAutomaton const& a) { return to_json(a); })
      .def("export_dot", [](MealyAutomaton const& a) { return export_dot(a); });

  m.def("parse_automaton", &parse_automaton, py::arg("text"));
  m.def("load_automaton",
        [](std::string const& path) { return load_automaton(path); },
        py::arg("path"));
  m.def("catalog", &catalog::by_name, py::arg("name"),
        "Catalog automaton by name, e.g. 'fig2:3' or 'adding'");
  m.def("v_set", &catalog::v_set, py::arg("i"));

  m.def(
      "act_word",
      [](MealyAutomaton const& a, StateIndex q, Word const& u) {
        auto r = act_word(a, q, u);
        return std::make_pair(r.image, r.section);
      },
      py::arg("automaton"), py::arg("state"), py::arg("word"));
  m.def(
      "act_stateword",
      [](MealyAutomaton const& a, std::vector<StateIndex> const& s,
         Word const& u) {
        auto r = act_stateword(a, sw(s), u);
        return std::make_pair(r.image, r.section.states);
      },
      py::arg("automaton"), py::arg("stateword"), py::arg("word"),
      "Image and section; the rightmost state acts first");
  m.def(
      "act_upword",
      [](MealyAutomaton const& a, std::vector<StateIndex> const& s,
         Word const& pre, Word const& period) {
        auto y = act_upword(a, sw(s), UPWord(pre, period));
        return std::make_pair(y.preperiod(), y.period());
      },
      py::arg("automaton"), py::arg("stateword"), py::arg("preperiod"),
      py::arg("period"), "Canonical (preperiod, period) of the image");

  py::class_<Element>(m, "Element")
      .def_property_readonly("num_states", &Element::num_states)
      .def_property_readonly("is_identity", &Element::is_identity)
      .def_property_readonly("table",
                             [](Element const& e) {
                               std::vector<std::pair<Letter, StateIndex>> t;
                               for (auto const& x : e.table()) {
                                 t.emplace_back(x.output, x.next);
                               }
                               return t;
                             })
      .def("act", [](Element const& e, Word const& u) { return e.act(u); })
      .def("__eq__", &element_equal)
      .def("__hash__", &Element::hash);

  m.def(
      "element_of",
      [](MealyAutomaton const& a, std::vector<StateIndex> const& s) {
        return element_of(a, sw(s));
      },
      py::arg("automaton"), py::arg("stateword"));
  m.def("element_equal", &element_equal);
  m.def(
      "compose",
      [](Element const& e1, Element const& e2) { return compose(e1, e2); },
      "e1 o e2, applying e2 first");

  py::class_<GrowthReport>(m, "GrowthReport")
      .def_readonly("b", &GrowthReport::b)
      .def_readonly("closed", &GrowthReport::closed)
      .def_readonly("total", &GrowthReport::total)
      .def_property_readonly("witnesses", [](GrowthReport const& r) {
        std::vector<std::vector<StateIndex>> w;
        for (auto const& s : r.witnesses) {
          w.push_back(s.states);
        }
        return w;
      });
  m.def(
      "enumerate",
      [](MealyAutomaton const& a,
         std::optional<std::vector<std::vector<StateIndex>>> const& gens,
         size_t max_elements, size_t max_length) {
        return enumerate(a, gens_or_all(a, gens), max_elements, max_length);
      },
      py::arg("automaton"), py::arg("gens") = py::none(),
      py::arg("max_elements") = 10000, py::arg("max_length") = 12);

  m.def(
      "orbit",
      [](MealyAutomaton const& a,
         std::optional<std::vector<std::vector<StateIndex>>> const& gens,
         Word const& u, size_t cap) {
        return orbit_finite(a, gens_or_all(a, gens), u, cap).points;
      },
      py::arg("automaton"), py::arg("gens"), py::arg("word"),
      py::arg("cap") = kDefaultOrbitCap,
      "Points of the orbit of a finite word, basepoint first");
  m.def(
      "m_depth",
      [](MealyAutomaton const& a,
         std::optional<std::vector<std::vector<StateIndex>>> const& gens,
         Word const& v, size_t depth, size_t cap) {
        auto r = m_depth(GeneratorSet(a, gens_or_all(a, gens)), v, depth, cap);
        return std::make_pair(r.value, r.exceeded);
      },
      py::arg("automaton"), py::arg("gens"), py::arg("v"), py::arg("depth"),
      py::arg("cap") = kDefaultOrbitCap,
      "(value, exceeded) for max over |w| = depth of the orbit size of vw");

  py::class_<WitnessChain>(m, "WitnessChain")
      .def_readonly("prefixes", &WitnessChain::prefixes)
      .def_readonly("sizes", &WitnessChain::sizes)
      .def_readonly("capped", &WitnessChain::capped)
      .def_readonly("largest_orbit", &WitnessChain::largest_orbit);
  m.def(
      "witness_search",
      [](MealyAutomaton const& a,
         std::optional<std::vector<std::vector<StateIndex>>> const& gens,
         size_t max_depth, size_t lookahead, size_t orbit_cap) {
        return witness_search(GeneratorSet(a, gens_or_all(a, gens)),
                              {max_depth, lookahead, orbit_cap});
      },
      py::arg("automaton"), py::arg("gens") = py::none(),
      py::arg("max_depth") = 8, py::arg("lookahead") = 2,
      py::arg("orbit_cap") = kDefaultOrbitCap);

  py::class_<OrbitSignature>(m, "OrbitSignature")
      .def_readonly("size", &OrbitSignature::size)
      .def_readonly("points", &OrbitSignature::points)
      .def_readonly("endomaps", &OrbitSignature::endomaps)
      .def_readonly("sections", &OrbitSignature::sections)
      .def("__eq__", [](OrbitSignature const& a, OrbitSignature const& b) {
        return signature_equal(a, b);
      });
  m.def(
      "orbit_signature",
      [](MealyAutomaton const& a, std::vector<StateIndex> const& gens,
         Word const& v, size_t cap) { return orbit_signature(a, gens, v, cap); },
      py::arg("automaton"), py::arg("gens"), py::arg("word"),
      py::arg("cap") = kDefaultOrbitCap);

  py::class_<FinitenessVerdict>(m, "FinitenessVerdict")
      .def_property_readonly("is_finite", &FinitenessVerdict::is_finite)
      .def_property_readonly("order",
                             [](FinitenessVerdict const& v) -> std::optional<size_t> {
                               if (v.is_finite()) {
                                 return v.finite().order;
                               }
                               return std::nullopt;
                             })
      .def_property_readonly("witness_sizes",
                             [](FinitenessVerdict const& v) {
                               return v.is_finite() ? std::vector<size_t>{}
                                                    : v.unknown().chain.sizes;
                             });
  m.def(
      "decide",
      [](MealyAutomaton const& a,
         std::optional<std::vector<std::vector<StateIndex>>> const& gens,
         size_t max_elements, size_t max_length, size_t max_depth,
         size_t lookahead, size_t orbit_cap) {
        FinitenessBudget b;
        b.enumeration = {max_elements, max_length};
        b.witness     = {max_depth, lookahead, orbit_cap};
        return decide(a, gens_or_all(a, gens), b);
      },
      py::arg("automaton"), py::arg("gens") = py::none(),
      py::arg("max_elements") = 10000, py::arg("max_length") = 12,
      py::arg("max_depth") = 8, py::arg("lookahead") = 2,
      py::arg("orbit_cap") = kDefaultOrbitCap);
  m.def(
      "verdict_json",
      [](MealyAutomaton const& a,
         std::optional<std::vector<std::vector<StateIndex>>> const& gens,
         FinitenessVerdict const& v) {
        return report::dump(report::to_json(a, gens_or_all(a, gens), v));
      },
      py::arg("automaton"), py::arg("gens"), py::arg("verdict"));
}
