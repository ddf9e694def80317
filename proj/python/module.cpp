#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "colog/cli.hpp"
#include "colog/defaults.hpp"
#include "colog/epsilon.hpp"
#include "colog/errors.hpp"
#include "colog/evaluate.hpp"
#include "colog/orderings.hpp"
#include "colog/parser.hpp"
#include "colog/search.hpp"

namespace py = pybind11;
using namespace colog;

namespace {

SearchBounds bounds(const std::string& model_class, std::size_t atoms, std::size_t multiplicity) {
  if (model_class != "CO" && model_class != "CO*") throw InputError("model_class must be 'CO' or 'CO*'");
  return SearchBounds::of(model_class == "CO*" ? ModelClass::COStar : ModelClass::CO, atoms, multiplicity);
}

std::vector<Formula> parse_all(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  for (const auto& t : texts) out.push_back(parse(t));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ranked-model reasoning for the modal logics CO and CO*.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<UnknownAtomError>(m, "UnknownAtomError", error.ptr());
  py::register_exception<BoundsError>(m, "BoundsError", error.ptr());
  py::register_exception<InputError>(m, "InputError", error.ptr());

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& text) { return parse(text); }), py::arg("text"))
      .def("desugar", [](const Formula& f) { return desugar(f); })
      .def_property_readonly("atoms", [](const Formula& f) { return atoms(f); })
      .def_property_readonly("is_propositional", [](const Formula& f) { return is_propositional(f); })
      .def("__str__", [](const Formula& f) { return render(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + render(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", [](const Formula& f) { return py::hash(py::str(render(f))); });

  py::class_<RankedModel>(m, "Model")
      .def(py::init([](const std::string& text) { return parse_model(text); }), py::arg("text"))
      .def_property_readonly("atoms", &RankedModel::vocabulary)
      .def_property_readonly("ranks", [](const RankedModel& r) {
        std::vector<Rank> out;
        for (const auto& w : r.worlds()) out.push_back(w.rank);
        return out;
      })
      .def_property_readonly("valuations", [](const RankedModel& r) {
        std::vector<std::uint32_t> out;
        for (const auto& w : r.worlds()) out.push_back(w.valuation.bits);
        return out;
      })
      .def("is_co_star", &RankedModel::is_co_star)
      .def("evaluate", [](const RankedModel& r, const Formula& f, std::size_t world) { return evaluate(r, world, f); },
           py::arg("formula"), py::arg("world"))
      .def("holds", [](const RankedModel& r, const Formula& f) { return holds_globally(r, f); }, py::arg("formula"))
      .def("believes", [](const RankedModel& r, const Formula& f) { return believes(r, f); })
      .def("only_knows", [](const RankedModel& r, const Formula& f) { return only_knows(r, f); })
      .def("ordering", [](const RankedModel& r) { return to_text(extract_ordering(r)); })
      .def("__len__", &RankedModel::size)
      .def("__str__", [](const RankedModel& r) { return to_text(r); })
      .def("__eq__", [](const RankedModel& a, const RankedModel& b) { return same_worlds(a, b); });

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("holds", &Verdict::holds)
      .def_readonly("models_checked", &Verdict::models_checked)
      .def_property_readonly("status", [](const Verdict& v) { return std::string(status_name(v.status)); })
      .def_property_readonly("countermodel",
                             [](const Verdict& v) -> std::optional<RankedModel> {
                               if (!v.witness) return std::nullopt;
                               return v.witness->model;
                             })
      .def_property_readonly("world", [](const Verdict& v) -> std::optional<std::size_t> {
        if (!v.witness) return std::nullopt;
        return v.witness->world;
      });

  m.def(
      "find_countermodel",
      [](const std::vector<std::string>& premises, const std::string& goal, const std::string& model_class,
         std::size_t atoms, std::size_t multiplicity, bool local) {
        return find_countermodel(parse_all(premises), parse(goal), bounds(model_class, atoms, multiplicity),
                                 local ? Consequence::Local : Consequence::Global);
      },
      py::arg("premises"), py::arg("goal"), py::arg("model_class") = "CO", py::arg("atoms") = 2,
      py::arg("multiplicity") = 1, py::arg("local") = false);

  m.def(
      "default_query",
      [](const std::string& kb, const std::string& query, const std::string& model_class) {
        QueryOptions opts;
        bounds(model_class, 1, 1);
        opts.model_class = model_class == "CO*" ? ModelClass::COStar : ModelClass::CO;
        return kb_entails_conditional(ConditionalKB::parse(kb), ConditionalRule::parse(query), opts);
      },
      py::arg("kb"), py::arg("query"), py::arg("model_class") = "CO*");

  m.def(
      "epsilon_entails",
      [](const std::string& kb, const std::string& query) {
        return epsilon_entails(ConditionalKB::parse(kb).rules(), ConditionalRule::parse(query));
      },
      py::arg("kb"), py::arg("query"));

  m.def(
      "rebuild", [](const std::string& ordering) { return model_from_ordering(parse_ordering(ordering)); },
      py::arg("ordering"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
