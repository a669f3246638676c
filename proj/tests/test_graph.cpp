#include <doctest.h>

#include "support.hpp"
#include "udpkit/errors.hpp"

using namespace udpkit;
using udptest::load_fixture;
using udptest::make_graph;
using udptest::wi;

namespace {

Skeleton k4() {
  return Skeleton{{"1", "2", "3", "4"},
                  {{"12", "1", "2"}, {"23", "2", "3"}, {"24", "2", "4"}, {"34", "3", "4"}, {"13", "1", "3"},
                   {"14", "1", "4"}}};
}

}  // namespace

TEST_CASE("graph construction validates its input") {
  const auto w = udptest::W();
  CHECK_THROWS_AS(LabeledGraph(w, {"a", "b", "c"}, {{"e", "a", "b", wi("x")}}), GraphError);
  CHECK_THROWS_AS(LabeledGraph(w, {"a", "b"}, {{"e", "a", "a", wi("x")}}), GraphError);
  CHECK_THROWS_AS(LabeledGraph(w, {"a", "b"}, {{"e", "a", "q", wi("x")}}), GraphError);
  CHECK_THROWS_AS(LabeledGraph(w, {"a", "a"}, {}), GraphError);
  CHECK_THROWS_AS(LabeledGraph(w, {"a", "b"}, {{"e", "a", "b", wi("x")}, {"e", "a", "b", wi("y")}}), GraphError);
  CHECK_THROWS_AS(LabeledGraph(w, {"a", "b"}, {{"e", "a", "b", Ideal::unit(Ring::integers())}}),
                  GraphError);
  const LabeledGraph single(w, {"a"}, {});
  CHECK(single.vertex_count() == 1);
}

TEST_CASE("incidence lists are sorted by neighbor name") {
  const auto g = make_graph(udptest::W(), {{"m", "c", wi("x")}, {"m", "a", wi("y")}, {"m", "b", wi("x")}});
  std::vector<std::string> names;
  for (const auto& inc : g.incident(g.vertex_index("m"))) names.push_back(g.vertices()[inc.neighbor]);
  CHECK(names == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("paths and their label sums") {
  const auto g = load_fixture("triangle_pendant_w.graph");
  const auto paths = all_paths(g, "1", "3");
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].vertices.front() == "1");
  CHECK(paths[0].vertices.back() == "3");
  std::set<std::string> sums;
  for (const auto& p : paths) sums.insert(path_label_sum(g, p).to_string());
  CHECK(sums == std::set<std::string>{"<x, y>"});
  CHECK(paths_intersection(g, "1", "3") == wi("xy"));
  CHECK(paths_intersection(g, "3", "4") == wi("y"));
  CHECK_THROWS_AS(all_paths(g, "1", "1"), GraphError);
}

TEST_CASE("paths_intersection matches the naive element-set oracle") {
  for (const auto* name : {"unicyclic_counterexample_w.graph", "diamond_w.graph", "bowtie_w.graph",
                           "two_triangles_holds_w.graph", "diamond_multigraph_w.graph"}) {
    const auto g = load_fixture(name);
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (u == v) continue;
        CHECK(udptest::index_set(paths_intersection(g, g.vertices()[u], g.vertices()[v])) ==
              udptest::naive_intersection(g, u, v));
      }
    }
  }
}

TEST_CASE("paths_intersection over Z and the zpoly capability gate") {
  const auto g = load_fixture("cycle_with_trees_z.graph");
  // u-v2-v1-v4-w gives <2>+<3>+<1>+<2>, u-v2-v3-v4-w gives <2>+<4>+<5>+<2>.
  CHECK(paths_intersection(g, "u", "w").z_generator() == 1);
  CHECK(paths_intersection(g, "u", "v2").z_generator() == 2);
  CHECK(paths_intersection(g, "v2", "v3").z_generator() == 4);
  const auto p = load_fixture("spline_pentagon_zpoly.graph");
  CHECK_THROWS_AS(paths_intersection(p, "1", "3"), CapabilityError);
}

TEST_CASE("structure classes") {
  CHECK(classify_structure(load_fixture("square_path_holds_w.graph")) == StructureClass::Tree);
  CHECK(classify_structure(load_fixture("pentagon_z.graph")) == StructureClass::Cycle);
  CHECK(classify_structure(load_fixture("bowtie_w.graph")) == StructureClass::Other);
  CHECK(classify_structure(load_fixture("diamond_reduced_w.graph")) == StructureClass::Cycle);
  CHECK(is_unicyclic(load_fixture("unicyclic_counterexample_w.graph")));
  CHECK_FALSE(is_unicyclic(load_fixture("bowtie_w.graph")));
  CHECK_FALSE(load_fixture("diamond_multigraph_w.graph").is_simple());
  CHECK(to_string(StructureClass::Other) == "other");
}

TEST_CASE("PEDPP and choke points") {
  CHECK(has_pedpp(load_fixture("pentagon_z.graph")));
  CHECK(has_pedpp(load_fixture("square_path_holds_w.graph")));
  CHECK_FALSE(has_pedpp(load_fixture("bowtie_w.graph")));
  const auto g = load_fixture("choke_point_w.graph");
  CHECK_FALSE(has_pedpp(g));
  CHECK(choke_points(g, "u", "v") == std::set<std::string>{"w"});
  CHECK(choke_points(g, "u", "w").empty());
  CHECK(choke_points(g, "w", "v").empty());
  const auto bowtie = load_fixture("bowtie_w.graph");
  CHECK(choke_points(bowtie, "a", "b") == std::set<std::string>{"e"});
}

TEST_CASE("labeled subdivision") {
  const auto base = load_fixture("subdivision_base_w.graph");
  const std::vector<SubdivisionStep> plan = {{"e1", 2}, {"e2", 2}, {"e3", 2}};
  const auto sub = subdivide_labeled(base, plan);
  CHECK(sub.graph == load_fixture("subdivision_expanded_w.graph"));
  CHECK(sub.origin.at("e2.1") == "e2");
  CHECK(sub.origin.at("e4") == "e4");
  CHECK(sub.graph.vertex_count() == 7);

  const auto three = subdivide_labeled(base, std::vector<SubdivisionStep>{{"e4", 3}});
  CHECK(three.graph.edge_count() == 6);
  CHECK(three.graph.edge("e4.3").label == wi("xy"));

  CHECK_THROWS_AS(subdivide_labeled(base, std::vector<SubdivisionStep>{{"nope", 2}}), GraphError);
  CHECK_THROWS_AS(subdivide_labeled(base, std::vector<SubdivisionStep>{{"e1", 1}}), GraphError);
  CHECK_THROWS_AS(subdivide_labeled(base, std::vector<SubdivisionStep>{{"e1", 2}, {"e1", 3}}), GraphError);
}

TEST_CASE("multigraph reduction intersects parallel labels") {
  const auto g = load_fixture("diamond_multigraph_w.graph");
  const auto r = reduce_multigraph(g);
  CHECK(r == load_fixture("diamond_reduced_w.graph"));
  CHECK(r.is_simple());
  const auto simple = load_fixture("bowtie_w.graph");
  CHECK(reduce_multigraph(simple) == simple);
}

TEST_CASE("pasting at a vertex") {
  const auto w = udptest::W();
  const auto a = make_graph(w, {{"p", "q", wi("x")}});
  const auto b = make_graph(w, {{"p", "r", wi("y")}, {"r", "s", wi("x+y")}});
  const auto pasted = paste_at_vertex(a, b, "q", "r");
  CHECK(pasted.joint == "q");
  CHECK(pasted.graph.vertex_count() == 4);
  CHECK(pasted.graph.edge_count() == 3);
  // b's vertex p clashes with a's p, and both graphs use edge id e1.
  CHECK(pasted.second_vertices.at("p") == "g2.p");
  CHECK(pasted.second_vertices.at("r") == "q");
  CHECK(pasted.second_edges.at("e1") == "g2.e1");
  CHECK(pasted.graph.edge("g2.e1").label == wi("y"));
  CHECK(classify_structure(pasted.graph) == StructureClass::Tree);
  CHECK_THROWS_AS(paste_at_vertex(a, b, "nope", "r"), GraphError);
  CHECK_THROWS_AS(paste_at_vertex(a, load_fixture("pentagon_z.graph"), "q", "a"), RingMismatchError);
}

TEST_CASE("embedding into a host skeleton with unit labels") {
  const auto h = load_fixture("triangle_pendant_w.graph");
  const auto ext = extend_with_unit_labels(h, k4());
  CHECK(ext.edge_count() == 6);
  CHECK(ext.edge("13").label.is_unit());
  CHECK(ext.edge("14").label.is_unit());
  CHECK(ext.edge("24").label == wi("y"));
  // Every new path crosses a <1> edge, so path intersections are unchanged.
  for (const auto& [u, v] : std::vector<std::pair<std::string, std::string>>{{"1", "3"}, {"2", "4"}, {"1", "4"}}) {
    CHECK(paths_intersection(ext, u, v) == paths_intersection(h, u, v));
  }
  Skeleton wrong = k4();
  wrong.edges[0] = {"12", "1", "3"};
  CHECK_THROWS_AS(extend_with_unit_labels(h, wrong), GraphError);
}
