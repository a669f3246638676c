#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "udpkit/analysis.hpp"
#include "udpkit/census.hpp"
#include "udpkit/cli.hpp"
#include "udpkit/errors.hpp"
#include "udpkit/graph_io.hpp"

namespace py = pybind11;
using namespace udpkit;

namespace {

/// Spline values cross the boundary as {vertex: element literal}.
using PyValues = std::map<std::string, std::string>;

VertexValues to_values(const LabeledGraph& g, const PyValues& in) {
  VertexValues out;
  for (const auto& [v, text] : in) out.emplace(v, parse_element(g.ring(), text));
  return out;
}

PyValues from_values(const VertexValues& in) {
  PyValues out;
  for (const auto& [v, e] : in) out.emplace(v, e.to_string());
  return out;
}

py::object triple_or_none(const std::optional<IdealTriple>& t) {
  if (!t) return py::none();
  return py::make_tuple(t->i, t->j, t->k);
}

py::tuple construction(const Construction& c) {
  return py::make_tuple(c.graph, c.u, c.w, c.z ? py::cast(*c.z) : py::none());
}

}  // namespace

PYBIND11_MODULE(_udpkit, m) {
  m.doc() = "Generalized graph splines and the Universal Difference Property";

  auto base = py::register_exception<Error>(m, "UdpkitError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<CapabilityError>(m, "CapabilityError", base.ptr());
  py::register_exception<GraphError>(m, "GraphError", base.ptr());
  py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ObstructionError>(m, "ObstructionError", base.ptr());

  py::class_<Ring>(m, "Ring")
      .def_static("integers", &Ring::integers)
      .def_static("modular", &Ring::modular)
      .def_static("witness", &Ring::witness)
      .def_static("polynomials", &Ring::polynomials)
      .def_property_readonly("literal", &Ring::literal)
      .def_property_readonly("is_finite", &Ring::is_finite)
      .def("size", &Ring::size)
      .def("__eq__", [](const Ring& a, const Ring& b) { return a == b; })
      .def("__repr__", [](const Ring& r) { return "Ring('" + r.literal() + "')"; });
  m.def("parse_ring", &parse_ring);

  py::class_<Element>(m, "Element")
      .def_property_readonly("ring", &Element::ring)
      .def_property_readonly("index", &Element::index)
      .def("is_zero", &Element::is_zero)
      .def("__add__", [](const Element& a, const Element& b) { return a + b; })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def("__mul__", [](const Element& a, const Element& b) { return a * b; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__hash__", [](const Element& a) { return py::hash(py::str(a.ring().literal() + ":" + a.to_string())); })
      .def("__str__", &Element::to_string)
      .def("__repr__", [](const Element& e) { return "Element('" + e.to_string() + "')"; });
  m.def("parse_element", &parse_element);
  m.def("ring_elements", &ring_elements);

  py::class_<Ideal>(m, "Ideal")
      .def_property_readonly("ring", &Ideal::ring)
      .def("is_zero", &Ideal::is_zero)
      .def("is_unit", &Ideal::is_unit)
      .def("__contains__", [](const Ideal& i, const Element& e) { return ideal_member(e, i); })
      .def("__add__", [](const Ideal& a, const Ideal& b) { return ideal_sum(a, b); })
      .def("__and__", [](const Ideal& a, const Ideal& b) { return ideal_intersect(a, b); })
      .def("__le__", [](const Ideal& a, const Ideal& b) { return ideal_contains(b, a); })
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return a == b; })
      .def("__hash__", [](const Ideal& i) { return py::hash(py::str(i.ring().literal() + ":" + i.to_string())); })
      .def("elements", &ideal_elements)
      .def("__str__", &Ideal::to_string)
      .def("__repr__", [](const Ideal& i) { return "Ideal('" + i.to_string() + "')"; });
  m.def("parse_ideal", &parse_ideal);
  m.def("all_ideals", &all_ideals);
  m.def("is_distributive_triple", &is_distributive_triple);
  m.def("find_nondistributive_triple", [](const Ring& r) { return triple_or_none(find_nondistributive_triple(r)); });
  m.def("decompose_in_sum", [](const Element& r, const std::vector<Ideal>& ideals) {
    return decompose_in_sum(r, ideals);
  });
  m.def("extended_gcd", [](long long a, long long b) {
    const auto r = extended_gcd(a, b);
    return py::make_tuple(static_cast<long long>(r.g), static_cast<long long>(r.s), static_cast<long long>(r.t));
  });

  py::class_<LabeledGraph>(m, "Graph")
      .def_static("parse", &parse_graph_file, py::arg("text"))
      .def_static("load", [](const std::string& path) { return load_graph_document(path).graph; })
      .def_property_readonly("ring", &LabeledGraph::ring)
      .def_property_readonly("vertices", &LabeledGraph::vertices)
      .def_property_readonly("edges",
                             [](const LabeledGraph& g) {
                               py::list out;
                               for (const auto& e : g.edges()) out.append(py::make_tuple(e.id, e.u, e.v, e.label));
                               return out;
                             })
      .def("is_simple", &LabeledGraph::is_simple)
      .def("serialize", [](const LabeledGraph& g) { return serialize_graph(g); })
      .def("__eq__", [](const LabeledGraph& a, const LabeledGraph& b) { return a == b; })
      .def("__str__", [](const LabeledGraph& g) { return serialize_graph(g); });

  m.def("load_splines", [](const std::string& path) {
    std::vector<PyValues> out;
    for (const auto& s : load_graph_document(path).splines) out.push_back(from_values(s));
    return out;
  });
  m.def("all_paths", [](const LabeledGraph& g, const std::string& u, const std::string& v) {
    py::list out;
    for (const auto& p : all_paths(g, u, v)) out.append(py::make_tuple(p.vertices, p.edges, path_label_sum(g, p)));
    return out;
  });
  m.def("paths_intersection", &paths_intersection);
  m.def("classify_structure", [](const LabeledGraph& g) { return std::string(to_string(classify_structure(g))); });
  m.def("has_pedpp", &has_pedpp);
  m.def("choke_points", &choke_points);

  m.def("subdivide", [](const LabeledGraph& g, const std::vector<std::pair<std::string, std::size_t>>& plan) {
    std::vector<SubdivisionStep> steps;
    for (const auto& [edge, segments] : plan) steps.push_back({edge, segments});
    return subdivide_labeled(g, steps).graph;
  });
  m.def("reduce_multigraph", &reduce_multigraph);
  m.def("paste_at_vertex", [](const LabeledGraph& a, const LabeledGraph& b, const std::string& z1,
                              const std::string& z2) {
    auto p = paste_at_vertex(a, b, z1, z2);
    return py::make_tuple(p.graph, p.joint, p.second_vertices);
  });

  m.def("verify_spline", [](const LabeledGraph& g, const PyValues& values) {
    const auto check = verify_spline(g, to_values(g, values));
    return py::make_tuple(check.ok, check.failing_edges);
  });
  m.def(
      "enumerate_splines",
      [](const LabeledGraph& g, const std::string& base, unsigned workers) {
        std::vector<PyValues> out;
        for (const auto& s : enumerate_splines(g, base, {1e8, workers})) out.push_back(from_values(s.values));
        return out;
      },
      py::arg("graph"), py::arg("base"), py::arg("workers") = 1);
  m.def("achievable_differences", [](const LabeledGraph& g, const std::string& u, const std::string& w) {
    return achievable_differences(g, u, w);
  });
  m.def("construct_tree_spline", [](const LabeledGraph& g, const std::string& u, const std::string& w,
                                    const Element& x) { return from_values(construct_tree_spline(g, u, w, x).values); });

  py::class_<UdpVerdict>(m, "Verdict")
      .def_property_readonly("status", [](const UdpVerdict& v) { return std::string(to_string(v.status)); })
      .def_readonly("rule", &UdpVerdict::rule)
      .def_readonly("evidence", &UdpVerdict::evidence)
      .def_property_readonly("witness",
                             [](const UdpVerdict& v) -> py::object {
                               if (!v.witness) return py::none();
                               return py::make_tuple(v.witness->u, v.witness->w, v.witness->x, v.witness->certified);
                             })
      .def("__repr__", [](const UdpVerdict& v) {
        return "Verdict(" + std::string(to_string(v.status)) + ", " + v.rule + ")";
      });

  m.def(
      "udp_bruteforce", [](const LabeledGraph& g, unsigned workers) { return udp_bruteforce(g, {1e8, workers}); },
      py::arg("graph"), py::arg("workers") = 1);
  m.def("udp_structural", &udp_structural);
  m.def("reverify_witness", [](const LabeledGraph& g, const UdpVerdict& v) { return reverify_witness(g, v); });

  m.def("build_unicyclic_counterexample",
        [](const Ideal& i, const Ideal& j, const Ideal& k) { return construction(build_unicyclic_counterexample(i, j, k)); });
  m.def("build_diamond_counterexample",
        [](const Ideal& i, const Ideal& j, const Ideal& k) { return construction(build_diamond_counterexample(i, j, k)); });
  m.def("construct_failing_labeling", [](const LabeledGraph& shape, const Ring& ring) {
    return construction(construct_failing_labeling(shape.skeleton(), ring));
  });
  m.def("check_prufer_obstruction", [](const Ring& ring) {
    const auto r = check_prufer_obstruction(ring);
    py::dict out;
    out["triple"] = triple_or_none(r.triple);
    out["graph"] = r.graph ? py::cast(r.graph->graph) : py::none();
    out["verdict"] = r.verdict ? py::cast(*r.verdict) : py::none();
    return out;
  });

  m.def(
      "run_census",
      [](const Ring& ring, std::size_t max_vertices, std::optional<std::uint64_t> sample, std::uint64_t seed) {
        CensusOptions options;
        options.max_vertices = max_vertices;
        options.sample = sample;
        options.seed = seed;
        const auto r = run_census(ring, options);
        py::dict out;
        out["graphs"] = r.graphs;
        out["labelings"] = r.labelings;
        out["holds_tree_or_cycle"] = r.holds_tree_or_cycle;
        out["holds_other"] = r.holds_other;
        out["fails_other"] = r.fails_other;
        out["discrepancies"] = r.discrepancies();
        return out;
      },
      py::arg("ring"), py::arg("max_vertices") = 4, py::arg("sample") = py::none(), py::arg("seed") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
