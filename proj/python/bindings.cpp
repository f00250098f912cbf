#include "synalg/checks.hpp"
#include "synalg/duality.hpp"
#include "synalg/error.hpp"
#include "synalg/io.hpp"
#include "synalg/minimize.hpp"
#include "synalg/regex.hpp"
#include "synalg/syntactic.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace synalg;

namespace {

struct Monoid {
  RecognizingPair pair;
  Alphabet alphabet;
  Variety variety = Variety::set();

  std::size_t size() const { return pair.monoid.size(); }

  std::vector<std::string> elements() const {
    std::vector<std::string> out;
    for (const auto &n : pair.monoid.names)
      out.push_back(format_free(n, alphabet));
    return out;
  }

  std::vector<std::vector<Elem>> table() const {
    const auto n = size();
    std::vector<std::vector<Elem>> out(n, std::vector<Elem>(n));
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        out[x][y] = pair.monoid.multiply(x, y);
    return out;
  }

  Elem evaluate(const std::string &u) const {
    return monoid_eval(pair.monoid, pair.e_on_letters, parse_free(u, alphabet, variety));
  }
};

Monoid wrap(const RecognizingPair &p, const DAutomaton &a) { return Monoid{p, a.alphabet, a.variety}; }

DAutomaton from_regex(const std::string &pattern, const std::string &alphabet) {
  return regex_to_dfa(pattern, Alphabet::from_string(alphabet));
}

} // namespace

PYBIND11_MODULE(_synalg, m) {
  m.doc() = "Syntactic algebras of regular languages";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<SizeGuardExceeded>(m, "SizeGuardExceeded", error.ptr());

  py::class_<DAutomaton>(m, "Automaton")
      .def_static("from_json", &parse_automaton, py::arg("text"))
      .def_static("from_file", &parse_automaton_file, py::arg("path"))
      .def_static("from_regex", &from_regex, py::arg("pattern"), py::arg("alphabet") = "ab")
      .def("to_json", &emit_automaton)
      .def_property_readonly("size", &DAutomaton::size)
      .def_property_readonly("variety", [](const DAutomaton &a) { return a.variety.label(); })
      .def_property_readonly("alphabet", [](const DAutomaton &a) { return std::string(a.alphabet.letters().begin(), a.alphabet.letters().end()); })
      .def("accepts", [](const DAutomaton &a, const std::string &w) { return accepts(a, a.alphabet.parse_word(w)); })
      .def("eval", [](const DAutomaton &a, const std::string &u) {
        return eval(a, parse_free(u, a.alphabet, a.variety));
      })
      .def("__len__", &DAutomaton::size);

  py::class_<Monoid>(m, "Monoid")
      .def_property_readonly("size", &Monoid::size)
      .def_property_readonly("elements", &Monoid::elements)
      .def_property_readonly("unit", [](const Monoid &x) { return x.pair.monoid.unit; })
      .def_property_readonly("generators", [](const Monoid &x) { return x.pair.e_on_letters; })
      .def_property_readonly("output", [](const Monoid &x) { return x.pair.f; })
      .def("table", &Monoid::table)
      .def("multiply", [](const Monoid &x, Elem a, Elem b) {
        if (a >= x.size() || b >= x.size())
          throw py::index_error("element out of range");
        return x.pair.monoid.multiply(a, b);
      })
      .def("evaluate", &Monoid::evaluate, py::arg("element"))
      .def("is_valid", [](const Monoid &x) {
        return monoid_validate(x.pair.monoid, x.variety).empty() && pair_validate(x.pair).empty();
      })
      .def("to_json", [](const Monoid &x) { return emit_monoid(x.pair, x.alphabet, MonoidFormat::Json); })
      .def("__len__", &Monoid::size);

  m.def("minimize", [](const DAutomaton &a) { return minimize(a).automaton; }, py::arg("automaton"));
  m.def("lift", [](const DAutomaton &a, const std::string &to, unsigned p) {
    return lift_automaton(a, Variety::from_name(to, p));
  }, py::arg("automaton"), py::arg("to"), py::arg("p") = 2);
  m.def("transition_monoid", [](const DAutomaton &a) { return wrap(transition_monoid(a), a); },
        py::arg("automaton"));
  m.def("syntactic_monoid", [](const DAutomaton &a) { return wrap(syntactic_monoid(a).pair, a); },
        py::arg("automaton"));
  m.def("syntactic_quotient_oracle",
        [](const DAutomaton &a) { return wrap(syntactic_quotient_oracle(a).pair, a); },
        py::arg("automaton"));
  m.def("isomorphic", [](const Monoid &x, const Monoid &y) {
    return generator_isomorphism(x.pair, y.pair).has_value();
  });
  m.def("syntactic_equivalent", [](const DAutomaton &a, const std::string &u, const std::string &w) {
    return syntactic_equivalent(a, parse_free(u, a.alphabet, a.variety), parse_free(w, a.alphabet, a.variety));
  }, py::arg("automaton"), py::arg("u"), py::arg("w"));
  m.def("verify_syndual", [](const DAutomaton &a) {
    return verify_syndual(RegularLanguageHandle::from_dfa(a)).isomorphic;
  }, py::arg("automaton"));
  m.def("verify_mindual", [](const DAutomaton &a) {
    return verify_mindual(RegularLanguageHandle::from_dfa(a)).isomorphic;
  }, py::arg("automaton"));
  m.def("run_checks", [](std::uint64_t seed, std::size_t instances, const std::vector<std::string> &varieties) {
    CheckConfig cfg;
    cfg.seed = seed;
    cfg.instance_count = instances;
    cfg.varieties.clear();
    for (const auto &v : varieties)
      cfg.varieties.push_back(Variety::from_name(v).tag());
    const CheckReport r = run_checks(cfg);
    return py::make_tuple(r.ok(), r.text());
  }, py::arg("seed") = 42, py::arg("instances") = 20, py::arg("varieties") = std::vector<std::string>{"set"});
}
