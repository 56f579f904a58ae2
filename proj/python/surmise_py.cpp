#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "surmise/cli.hpp"
#include "surmise/core.hpp"
#include "surmise/csv.hpp"
#include "surmise/error.hpp"
#include "surmise/hasse.hpp"
#include "surmise/kst.hpp"
#include "surmise/order.hpp"
#include "surmise/report.hpp"
#include "surmise/synth.hpp"

namespace py = pybind11;
using namespace surmise;

namespace {

Flexibility to_flexibility(const py::object& value) {
  if (py::isinstance<Flexibility>(value)) return value.cast<Flexibility>();
  return Flexibility::parse(py::str(value).cast<std::string>());
}

std::vector<std::vector<bool>> matrix_rows(const BoolMatrix& m) {
  std::vector<std::vector<bool>> rows(m.size(), std::vector<bool>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
  return rows;
}

std::vector<std::vector<std::string>> state_names(const KnowledgeStructure& s,
                                                  const std::vector<KnowledgeState>& states) {
  std::vector<std::vector<std::string>> out;
  for (const auto& k : states) {
    std::vector<std::string> names;
    for (auto m : k.members()) names.push_back(s.ground()[m]);
    out.push_back(std::move(names));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_surmise, m) {
  m.doc() = "Prerequisite hierarchies among targets from 0/1 judgment tables";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ConstraintError>(m, "ConstraintError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  py::class_<PairCounts>(m, "PairCounts")
      .def_readonly("n1", &PairCounts::n1)
      .def_readonly("n2", &PairCounts::n2)
      .def_readonly("n3", &PairCounts::n3)
      .def_readonly("n4", &PairCounts::n4)
      .def("as_tuple", [](const PairCounts& c) { return py::make_tuple(c.n1, c.n2, c.n3, c.n4); })
      .def("__eq__", [](const PairCounts& a, const PairCounts& b) { return a == b; })
      .def("__repr__", [](const PairCounts& c) {
        std::ostringstream os;
        os << "PairCounts(n1=" << c.n1 << ", n2=" << c.n2 << ", n3=" << c.n3 << ", n4=" << c.n4 << ")";
        return os.str();
      });

  py::class_<Flexibility>(m, "Flexibility")
      .def(py::init<>())
      .def_static("parse", &Flexibility::parse, py::arg("percent"))
      .def_static("from_basis_points", &Flexibility::from_basis_points, py::arg("bp"))
      .def_property_readonly("basis_points", &Flexibility::basis_points)
      .def("__str__", &Flexibility::to_string)
      .def("__repr__", [](const Flexibility& f) { return "Flexibility('" + f.to_string() + "')"; });

  py::class_<JudgmentTable>(m, "JudgmentTable")
      .def(py::init(&build_table), py::arg("targets"), py::arg("models"), py::arg("bits"))
      .def_property_readonly("targets", [](const JudgmentTable& t) {
        std::vector<std::string> out;
        for (const auto& x : t.targets()) out.push_back(x.name);
        return out;
      })
      .def_property_readonly("models", [](const JudgmentTable& t) {
        std::vector<std::string> out;
        for (const auto& x : t.models()) out.push_back(x.name);
        return out;
      })
      .def_property_readonly("model_count", &JudgmentTable::model_count)
      .def_property_readonly("target_count", &JudgmentTable::target_count)
      .def("tab", &JudgmentTable::tab, py::arg("model"), py::arg("target"))
      .def("target_index", &JudgmentTable::target_index, py::arg("name"))
      .def("support", [](const JudgmentTable& t, std::size_t j) { return support(t, j); }, py::arg("target"))
      .def("pair_counts", [](const JudgmentTable& t, std::size_t p, std::size_t q) { return pair_counts(t, p, q); },
           py::arg("p"), py::arg("q"))
      .def("to_csv", &write_csv)
      .def("__eq__", [](const JudgmentTable& a, const JudgmentTable& b) { return a == b; });

  m.def("parse_csv", [](const std::string& text) { return parse_csv(text); }, py::arg("text"));
  m.def("flexible_leq", &flexible_leq, py::arg("counts"), py::arg("alpha"), py::arg("same_target") = false);

  m.def(
      "equivalence_classes",
      [](const JudgmentTable& t, const py::object& flexibility, unsigned threads) {
        std::vector<std::pair<std::string, std::vector<std::string>>> out;
        for (const auto& b : equivalence_classes(t, to_flexibility(flexibility), threads).blocks) {
          std::vector<std::string> members;
          for (const auto& x : b.members) members.push_back(x.name);
          out.emplace_back(b.representative.name, std::move(members));
        }
        return out;
      },
      py::arg("table"), py::arg("flexibility") = "0", py::arg("threads") = 1U,
      "List of (representative, members) pairs.");

  py::class_<OrderMatrix>(m, "OrderMatrix")
      .def_property_readonly("names", [](const OrderMatrix& o) {
        std::vector<std::string> out;
        for (const auto& n : o.nodes) out.push_back(n.representative.name);
        return out;
      })
      .def_property_readonly("bits", [](const OrderMatrix& o) { return matrix_rows(o.bits); })
      .def("leq", [](const OrderMatrix& o, std::size_t a, std::size_t b) { return o.bits(a, b); })
      .def("is_partial_order", [](const OrderMatrix& o) { return verify_partial_order(o).ok(); })
      .def("diagnostics", [](const OrderMatrix& o) { return verify_partial_order(o).describe(); });

  m.def(
      "order_matrix",
      [](const JudgmentTable& t, const py::object& flexibility, unsigned threads) {
        return order_matrix(t, to_flexibility(flexibility), threads);
      },
      py::arg("table"), py::arg("flexibility") = "0", py::arg("threads") = 1U);

  py::class_<HasseDiagram>(m, "HasseDiagram")
      .def_property_readonly("names", [](const HasseDiagram& d) {
        std::vector<std::string> out;
        for (const auto& n : d.nodes) out.push_back(n.name);
        return out;
      })
      .def_property_readonly("members", [](const HasseDiagram& d) {
        std::vector<std::vector<std::string>> out;
        for (const auto& n : d.nodes) out.push_back(n.members);
        return out;
      })
      .def_property_readonly("edges", [](const HasseDiagram& d) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [lo, hi] : d.edges) out.emplace_back(d.nodes[lo].name, d.nodes[hi].name);
        return out;
      })
      .def_property_readonly("layers", [](const HasseDiagram& d) { return d.layers; })
      .def("to_dot", &emit_dot)
      .def("to_json", &emit_hasse_json);

  m.def("transitive_reduction", &transitive_reduction, py::arg("order"));

  py::class_<Analysis>(m, "Analysis")
      .def_readonly("order", &Analysis::order)
      .def_readonly("diagram", &Analysis::diagram)
      .def("to_json", [](const Analysis& a) { return emit_report(a.report, ReportFormat::Json); })
      .def("to_text", [](const Analysis& a) { return emit_report(a.report, ReportFormat::Text); })
      .def("to_dot", [](const Analysis& a) { return emit_dot(a.diagram); });

  m.def(
      "analyze",
      [](const JudgmentTable& t, const py::object& flexibility, bool counts, unsigned threads) {
        return analyze(t, to_flexibility(flexibility), counts, threads);
      },
      py::arg("table"), py::arg("flexibility") = "0", py::arg("counts") = false, py::arg("threads") = 1U);

  py::class_<KnowledgeStructure>(m, "KnowledgeStructure")
      .def(py::init([](std::vector<std::string> ground, const std::vector<std::vector<std::string>>& states,
                       bool completed) { return make_structure(std::move(ground), states, completed); }),
           py::arg("ground"), py::arg("states"), py::arg("completed") = false)
      .def_static("from_table", &structure_from_table, py::arg("table"), py::arg("complete") = true)
      .def_property_readonly("ground", &KnowledgeStructure::ground)
      .def_property_readonly("states", [](const KnowledgeStructure& s) { return state_names(s, s.states()); })
      .def_property_readonly("completed", &KnowledgeStructure::completed)
      .def("states_containing",
           [](const KnowledgeStructure& s, const std::string& q) { return state_names(s, states_containing(s, q)); })
      .def("surmise", [](const KnowledgeStructure& s) { return matrix_rows(surmise_from_structure(s)); })
      .def("concepts", [](const KnowledgeStructure& s) {
        std::vector<std::pair<std::string, std::vector<std::string>>> out;
        for (const auto& c : equally_informative(s).blocks) {
          std::vector<std::string> members;
          for (auto x : c.members) members.push_back(s.ground()[x]);
          out.emplace_back(s.ground()[c.representative], std::move(members));
        }
        return out;
      })
      .def("discriminative_reduction", &discriminative_reduction)
      .def("is_discriminative", &is_discriminative)
      .def("to_text", &emit_structure);

  py::class_<PlantedPoset>(m, "PlantedPoset")
      .def(py::init(&make_poset), py::arg("elements"), py::arg("covers"))
      .def_readonly("elements", &PlantedPoset::elements)
      .def_readonly("covers", &PlantedPoset::covers)
      .def("downsets", &all_downsets);

  m.def("random_poset", &random_poset, py::arg("n"), py::arg("density"), py::arg("seed"));
  m.def(
      "sample_models",
      [](const PlantedPoset& poset, std::size_t models, double noise, std::uint64_t seed) {
        return sample_models({poset, models, noise, seed});
      },
      py::arg("poset"), py::arg("models"), py::arg("noise") = 0.0, py::arg("seed") = 0);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
