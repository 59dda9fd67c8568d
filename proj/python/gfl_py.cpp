#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/operators.h>

#include "gfl/coloring.hpp"
#include "gfl/constructions.hpp"
#include "gfl/detect.hpp"
#include "gfl/errors.hpp"
#include "gfl/gallai.hpp"
#include "gfl/search.hpp"

namespace py = pybind11;
using namespace gfl;

namespace {

auto edges_from(const std::vector<std::pair<Vertex, Vertex>> &pairs) -> EdgeList {
  EdgeList out;
  for (auto [u, v] : pairs)
    out.emplace_back(u, v);
  return out;
}

auto pairs_of(const EdgeList &edges) -> py::list {
  py::list out;
  for (auto e : edges)
    out.append(py::make_tuple(e.u, e.v));
  return out;
}

auto fan_dict(const MonoFan &f) -> py::dict {
  py::dict d;
  d["color"] = f.color;
  d["center"] = f.center;
  d["edges"] = pairs_of(f.matching);
  return d;
}

auto budget_of(std::optional<std::uint64_t> nodes, std::optional<double> seconds) -> SearchBudget {
  if (!nodes && !seconds)
    return SearchBudget::none();
  return {nodes, seconds, false};
}

auto outcome_dict(const SearchOutcome &o) -> py::dict {
  py::dict d;
  d["verdict"] = std::string(verdict_name(o.verdict));
  d["nodes"] = o.stats.nodes;
  d["prunes"] = o.stats.prunes;
  d["leaves"] = o.stats.leaves;
  d["cases"] = o.stats.cases;
  d["elapsed_seconds"] = o.stats.elapsed_seconds;
  d["witness"] = o.witness ? py::cast(*o.witness) : py::none();
  d["note"] = o.note;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gallai colorings without monochromatic fans";

  auto base = py::register_exception<Error>(m, "GflError");
  py::register_exception<PaletteError>(m, "PaletteError", base);
  py::register_exception<SelfLoopError>(m, "SelfLoopError", base);
  py::register_exception<IndexError>(m, "GflIndexError", base);
  py::register_exception<FormatError>(m, "FormatError", base);
  py::register_exception<LengthError>(m, "LengthError", base);
  py::register_exception<ParamError>(m, "ParamError", base);
  py::register_exception<OracleSizeError>(m, "OracleSizeError", base);
  py::register_exception<PartitionShapeError>(m, "PartitionShapeError", base);
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", base);

  py::class_<ColoredCompleteGraph>(m, "ColoredCompleteGraph")
      .def(py::init<Vertex, unsigned, Color>(), py::arg("n"), py::arg("k"), py::arg("fill") = 1)
      .def_property_readonly("order", &ColoredCompleteGraph::order)
      .def_property_readonly("palette", &ColoredCompleteGraph::palette)
      .def("color", &ColoredCompleteGraph::color)
      .def("set_color", &ColoredCompleteGraph::set_color)
      .def("to_gcg", [](const ColoredCompleteGraph &g) { return serialize_gcg(g); })
      .def_static("from_gcg", [](const std::string &s) { return parse_gcg(s); })
      .def(py::self == py::self)
      .def("__repr__", [](const ColoredCompleteGraph &g) {
        return "<ColoredCompleteGraph n=" + std::to_string(g.order()) +
               " k=" + std::to_string(g.palette()) + ">";
      });

  m.def("pentagon_coloring", &pentagon_coloring, py::arg("a"), py::arg("b"), py::arg("k") = 0);

  m.def("find_rainbow_triangle", [](const ColoredCompleteGraph &g) -> py::object {
    if (auto t = find_rainbow_triangle(g))
      return py::make_tuple(t->a, t->b, t->c);
    return py::none();
  });
  m.def("find_mono_fan", [](const ColoredCompleteGraph &g, unsigned fan, Color c) -> py::object {
    if (auto f = find_mono_fan(g, fan, c))
      return fan_dict(*f);
    return py::none();
  }, py::arg("g"), py::arg("m"), py::arg("c"));
  m.def("max_fan_order", py::overload_cast<const ColoredCompleteGraph &, Color>(&max_fan_order));
  m.def("count_useful_colors", &count_useful_colors);
  m.def("embeds_in_c4_c5_2k3", [](const std::vector<std::pair<Vertex, Vertex>> &edges) {
    auto e = edges_from(edges);
    return embeds_in_c4_c5_2k3(e);
  });
  m.def("is_fan_free_gallai", &is_fan_free_gallai, py::arg("g"), py::arg("m"));

  m.def("find_gallai_partition", [](const ColoredCompleteGraph &g) {
    auto p = find_gallai_partition(g);
    py::dict d;
    d["parts"] = p.parts;
    d["between_colors"] = p.between_colors;
    py::list pcs;
    for (const auto &pc : p.pair_colors)
      pcs.append(py::make_tuple(pc.i, pc.j, pc.c));
    d["pair_colors"] = pcs;
    d["reduced"] = quotient(g, p);
    return d;
  });

  m.def("construct", [](const std::string &family, unsigned k, unsigned n) {
    return construct({parse_family(family), k, n});
  }, py::arg("family"), py::arg("k"), py::arg("n") = 0);
  m.def("expected_order", [](const std::string &family, unsigned k, unsigned n) {
    return expected_order({parse_family(family), k, n});
  }, py::arg("family"), py::arg("k"), py::arg("n") = 0);

  m.def("bound_table", [](const std::string &family, unsigned k_max, unsigned n) {
    BoundFamily f = family == "f2"   ? BoundFamily::F2
                    : family == "f3" ? BoundFamily::F3
                    : family == "fn" ? BoundFamily::Fn
                                     : throw ParamError("unknown bound family '" + family + "'");
    auto t = bound_table(f, k_max, n);
    py::list rows;
    for (const auto &r : t.rows) {
      py::dict d;
      d["k"] = r.k;
      d["lower"] = r.lower;
      d["upper"] = r.upper;
      d["exact"] = r.exact ? py::cast(*r.exact) : py::none();
      rows.append(d);
    }
    return rows;
  }, py::arg("family"), py::arg("k_max"), py::arg("n") = 0);

  m.def("ramsey2_decide", [](unsigned fan, Vertex n, std::optional<std::uint64_t> max_nodes,
                             std::optional<double> max_seconds) {
    SearchOptions o;
    o.deterministic = true;
    SearchOutcome out;
    {
      py::gil_scoped_release release;
      out = ramsey2_decide(fan, n, budget_of(max_nodes, max_seconds), o);
    }
    return outcome_dict(out);
  }, py::arg("m"), py::arg("n"), py::arg("max_nodes") = py::none(),
        py::arg("max_seconds") = py::none());
  m.def("check_fact_k7", [] { return outcome_dict(check_fact_k7()); });
  m.def("check_claim_f2k8", [] {
    SearchOptions o;
    o.deterministic = true;
    return outcome_dict(check_claim_f2k8(SearchBudget::none(), o));
  });
  m.def("check_claim_f1", [](std::optional<std::uint64_t> max_nodes, std::optional<double> max_seconds) {
    return outcome_dict(check_claim_f1(budget_of(max_nodes, max_seconds)));
  }, py::arg("max_nodes") = py::none(), py::arg("max_seconds") = py::none());
}
