#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtrend/error.hpp"
#include "qtrend/ingest.hpp"
#include "qtrend/objectives.hpp"
#include "qtrend/rectifier.hpp"
#include "qtrend/report.hpp"

namespace py = pybind11;
using namespace qtrend;

namespace {

std::vector<std::vector<std::string>> rows_as_strings(const ScenarioSet& set) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : set.display_rows()) {
    std::vector<std::string> cells;
    for (const auto& p : row) cells.push_back(p.to_string());
    out.push_back(std::move(cells));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_qtrend, m) {
  m.doc() = "Qualitative trend models with three-valued signs";

  py::register_exception<Error>(m, "QtrendError", PyExc_ValueError);

  py::enum_<Sign>(m, "Sign")
      .value("PLUS", Sign::Plus)
      .value("ZERO", Sign::Zero)
      .value("MINUS", Sign::Minus);

  py::enum_<RelationType>(m, "RelationType")
      .value("INC", RelationType::Inc)
      .value("DEC", RelationType::Dec)
      .value("AG", RelationType::AG)
      .value("LG", RelationType::LG)
      .value("DG", RelationType::DG)
      .value("AD", RelationType::AD)
      .value("LD", RelationType::LD)
      .value("DD", RelationType::DD);

  py::enum_<Coupling>(m, "Coupling").value("WEAK", Coupling::Weak).value("STRONG", Coupling::Strong);
  py::enum_<Polarity>(m, "Polarity")
      .value("STANDARD", Polarity::Standard)
      .value("SWAPPED", Polarity::Swapped);
  py::enum_<Desire>(m, "Desire")
      .value("NEUTRAL", Desire::Neutral)
      .value("INCREASE", Desire::Increase)
      .value("DECREASE", Desire::Decrease);
  py::enum_<Objective>(m, "Objective").value("O1", Objective::O1).value("O2", Objective::O2);
  py::enum_<Grade>(m, "Grade")
      .value("ACCELERATING_MATCH", Grade::AcceleratingMatch)
      .value("MATCH", Grade::Match)
      .value("MISS", Grade::Miss);

  py::class_<Triplet>(m, "Triplet")
      .def(py::init<Sign, Sign, Sign>(), py::arg("value"), py::arg("d1"), py::arg("d2"))
      .def_static("parse",
                  [](const std::string& s) {
                    auto t = Triplet::parse(s);
                    if (!t) throw Error(ErrorCode::SyntaxError, "malformed triplet '" + s + "'");
                    return *t;
                  })
      .def_readonly("value", &Triplet::value)
      .def_readonly("d1", &Triplet::d1)
      .def_readonly("d2", &Triplet::d2)
      .def("__str__", &Triplet::to_string)
      .def("__repr__", [](const Triplet& t) { return "Triplet('" + t.to_string() + "')"; })
      .def("__eq__", [](const Triplet& a, const Triplet& b) { return a == b; })
      .def("__hash__", &Triplet::index);

  m.def("qneg", &qneg);
  m.def("qmul", &qmul);
  m.def("qadd", [](Sign a, Sign b) { return qadd(a, b).to_string(); },
        "Qualitative sum rendered as a sign-set string ('*' when unresolvable)");

  py::class_<Variable>(m, "Variable")
      .def_readonly("name", &Variable::name)
      .def_property_readonly("value_domain", [](const Variable& v) { return v.value_domain.to_string(); })
      .def_readonly("desire", &Variable::desire);

  py::class_<Relation>(m, "Relation")
      .def(py::init([](RelationType type, std::string x, std::string y, std::optional<double> weight,
                       std::optional<Coupling> coupling) {
             return Relation{type, std::move(x), std::move(y), weight, coupling};
           }),
           py::arg("type"), py::arg("x") = "X", py::arg("y") = "Y", py::arg("weight") = py::none(),
           py::arg("coupling") = py::none())
      .def_readonly("type", &Relation::type)
      .def_readonly("x", &Relation::x)
      .def_readonly("y", &Relation::y)
      .def_readonly("weight", &Relation::weight)
      .def_readonly("coupling", &Relation::coupling);

  py::class_<TrendModel>(m, "TrendModel")
      .def_property_readonly("variables", &TrendModel::variables)
      .def_property_readonly("relations", &TrendModel::relations)
      .def_property_readonly("polarity", &TrendModel::polarity)
      .def_property_readonly("coupling", &TrendModel::coupling)
      .def("with_polarity", &TrendModel::with_polarity)
      .def("with_coupling", &TrendModel::with_coupling)
      .def("__eq__", [](const TrendModel& a, const TrendModel& b) { return a == b; })
      .def("__str__", &serialize_model);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("index", &Scenario::index)
      .def_readonly("triplets", &Scenario::triplets)
      .def("is_steady", &Scenario::is_steady)
      .def("is_stationary", &Scenario::is_stationary)
      .def("__str__", [](const Scenario& s) {
        std::string out;
        for (const auto& t : s.triplets) out += (out.empty() ? "" : " ") + t.to_string();
        return out;
      });

  py::class_<ScenarioSet>(m, "ScenarioSet")
      .def_property_readonly("model", &ScenarioSet::model)
      .def_property_readonly("scenarios", &ScenarioSet::scenarios)
      .def_property_readonly("display_rows", &rows_as_strings)
      .def("__len__", &ScenarioSet::size)
      .def("at", &ScenarioSet::at, py::return_value_policy::copy);

  py::class_<TransitionGraph>(m, "TransitionGraph")
      .def_property_readonly("nodes", &TransitionGraph::nodes)
      .def_property_readonly("arcs", &TransitionGraph::arcs)
      .def("successors", &TransitionGraph::successors);

  py::class_<RemovalSet>(m, "RemovalSet")
      .def_readonly("rows", &RemovalSet::rows)
      .def_readonly("cost", &RemovalSet::cost);

  py::class_<ScenarioGrades>(m, "ScenarioGrades")
      .def_readonly("index", &ScenarioGrades::index)
      .def_readonly("grades", &ScenarioGrades::grades)
      .def_readonly("matched", &ScenarioGrades::matched)
      .def_readonly("accelerating", &ScenarioGrades::accelerating)
      .def_readonly("steady", &ScenarioGrades::steady)
      .def_readonly("terminal", &ScenarioGrades::terminal);

  py::class_<ObjectiveReport>(m, "ObjectiveReport")
      .def_readonly("objectives", &ObjectiveReport::objectives)
      .def_readonly("ranked", &ObjectiveReport::ranked);

  py::class_<CorrelationMatrix>(m, "CorrelationMatrix")
      .def(py::init<std::vector<std::string>, std::vector<std::vector<double>>>(),
           py::arg("names"), py::arg("entries"))
      .def_readonly("names", &CorrelationMatrix::names)
      .def_readonly("entries", &CorrelationMatrix::entries);

  m.def("parse_model", [](const std::string& text) { return parse_model(text); });
  m.def("serialize_model", &serialize_model);
  m.def("relation_admissible", &relation_admissible, py::arg("relation"), py::arg("tx"),
        py::arg("ty"), py::arg("polarity") = Polarity::Standard,
        py::arg("coupling") = Coupling::Weak);
  m.def("solve", &solve);
  m.def("is_restrictive", &is_restrictive);
  m.def("steady_scenarios", &steady_scenarios);
  m.def("rectify", &rectify, py::arg("model"), py::arg("objective") = Objective::O1);
  m.def("apply_removal", [](const TrendModel& model, const std::vector<std::size_t>& rows) {
    return apply_removal(model, RemovalSet{rows, 0.0});
  });
  m.def("one_dim_transitions", &one_dim_transitions);
  m.def("build_graph", &build_graph);
  m.def("terminals", &terminals);
  m.def("paths", &paths, py::arg("graph"), py::arg("source"), py::arg("target"),
        py::arg("max_len"));
  m.def("cycles", &cycles, py::arg("graph"), py::arg("max_cycles") = 0);
  m.def("reachable", &reachable);
  m.def("to_dot", &to_dot);
  m.def("grade", &grade);
  m.def("rank", &rank);
  m.def("parse_correlation_csv", [](const std::string& text) { return parse_correlation_csv(text); });
  m.def("from_correlation", &from_correlation, py::arg("matrix"), py::arg("threshold") = 0.0);
  m.def("scenarios_text", &report::scenarios_text, py::arg("scenarios"), py::arg("expanded") = false);
}
