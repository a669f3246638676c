#include <doctest.h>

#include "support.hpp"
#include "udpkit/errors.hpp"

using namespace udpkit;
using udptest::load_fixture;
using udptest::make_graph;
using udptest::we;
using udptest::wi;

namespace {

std::set<std::vector<std::uint64_t>> as_index_rows(const LabeledGraph& g, const std::vector<Spline>& splines) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& s : splines) {
    std::vector<std::uint64_t> row;
    for (const auto& v : g.vertices()) row.push_back(s.values.at(v).index());
    out.insert(row);
  }
  return out;
}

const char* kFiniteFixtures[] = {
    "unicyclic_counterexample_w.graph", "diamond_w.graph",         "diamond_multigraph_w.graph",
    "diamond_reduced_w.graph",          "bowtie_w.graph",          "triangle_pendant_w.graph",
    "square_holds_w.graph",             "square_path_holds_w.graph", "square_pendant_fails_w.graph",
    "square_jk_holds_w.graph",          "subdivision_base_w.graph", "two_triangles_minus_edge_w.graph",
};

}  // namespace

TEST_CASE("the zpoly pentagon spline verifies and single mutations are caught") {
  const auto doc = load_graph_document(udptest::fixture("spline_pentagon_zpoly.graph"));
  REQUIRE(doc.splines.size() == 1);
  const auto check = verify_spline(doc.graph, doc.splines[0]);
  CHECK(check.ok);
  CHECK(check.failing_edges.empty());

  auto broken = doc.splines[0];
  broken.at("2") = broken.at("2") + parse_element(Ring::polynomials(), "x");
  const auto bad = verify_spline(doc.graph, broken);
  CHECK_FALSE(bad.ok);
  CHECK(bad.failing_edges == std::vector<std::string>{"e23"});

  auto missing = doc.splines[0];
  missing.erase("3");
  CHECK_THROWS_AS(verify_spline(doc.graph, missing), GraphError);
  auto foreign = doc.splines[0];
  foreign.at("3") = we("x");
  CHECK_THROWS_AS(verify_spline(doc.graph, foreign), RingMismatchError);
}

TEST_CASE("enumerate_splines agrees with exhaustive assignment") {
  for (const auto* name : kFiniteFixtures) {
    INFO(name);
    const auto g = load_fixture(name);
    const auto fast = enumerate_splines(g, g.vertices()[0]);
    const auto naive = udptest::naive_splines(g);
    CHECK(fast.size() == naive.size());
    CHECK(as_index_rows(g, fast) == std::set<std::vector<std::uint64_t>>(naive.begin(), naive.end()));
    for (const auto& s : fast) CHECK(verify_spline(g, s.values).ok);
  }
}

TEST_CASE("spline counts on small graphs") {
  const auto w = udptest::W();
  CHECK(enumerate_splines(make_graph(w, {{"a", "b", wi("x")}}), "a").size() == 2);
  CHECK(enumerate_splines(make_graph(w, {{"a", "b", wi("xy")}, {"b", "c", wi("1")}}), "a").size() == 32);
  // Triangle over Z/6 with labels <2>, <3>, <1>: rho(b) in <2>, rho(c) - rho(b) in <3>.
  const auto m = Ring::modular(6);
  const auto two = Ideal::principal(Element::integer(m, 2));
  const auto three = Ideal::principal(Element::integer(m, 3));
  const auto tri = make_graph(m, {{"a", "b", two}, {"b", "c", three}, {"c", "a", Ideal::unit(m)}});
  CHECK(enumerate_splines(tri, "a").size() == 6);
  CHECK(SplineSpace(tri).spline_count() == 6);
}

TEST_CASE("achievable differences") {
  const auto g = load_fixture("unicyclic_counterexample_w.graph");
  const auto diffs = achievable_differences(g, "u", "w");
  // I + (J ∩ K) = <x>.
  CHECK(diffs == std::vector<Element>{we("0"), we("x")});
  const SplineSpace space(g);
  CHECK(space.differences(g.vertex_index("u"), g.vertex_index("w")) == diffs);
  CHECK(space.achievable(g.vertex_index("u"), g.vertex_index("w"), we("x").index()));
  CHECK_FALSE(space.achievable(g.vertex_index("u"), g.vertex_index("w"), we("y").index()));
}

TEST_CASE("brute force agrees with the definition on every finite fixture") {
  for (const auto* name : kFiniteFixtures) {
    INFO(name);
    const auto g = load_fixture(name);
    const auto verdict = udp_bruteforce(g);
    CHECK(verdict.rule == rules::kBruteForce);
    CHECK((verdict.status == UdpStatus::Holds) == udptest::naive_udp(g));
    if (verdict.status == UdpStatus::Fails) CHECK(reverify_witness(g, verdict));
  }
}

TEST_CASE("brute-force witness on the unicyclic counterexample") {
  const auto g = load_fixture("unicyclic_counterexample_w.graph");
  const auto verdict = udp_bruteforce(g);
  REQUIRE(verdict.status == UdpStatus::Fails);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->u == "u");
  CHECK(verdict.witness->w == "w");
  CHECK(verdict.witness->x == we("y"));
  CHECK(verdict.witness->certified);
  CHECK(verdict.evidence.size() == 3);
  CHECK(reverify_witness(g, verdict));

  auto forged = verdict;
  forged.witness->x = we("x");
  CHECK_FALSE(reverify_witness(g, forged));
  forged.witness->x = we("1");
  CHECK_FALSE(reverify_witness(g, forged));
  CHECK_FALSE(reverify_witness(g, udp_bruteforce(load_fixture("square_holds_w.graph"))));
}

TEST_CASE("worker count does not change results") {
  for (const auto* name : {"two_triangles_holds_w.graph", "square_tail_fails_w.graph", "choke_point_w.graph"}) {
    INFO(name);
    const auto g = load_fixture(name);
    const auto one = udp_bruteforce(g, {1e8, 1});
    const auto many = udp_bruteforce(g, {1e8, 3});
    CHECK(one.status == many.status);
    CHECK(one.evidence == many.evidence);
    if (one.witness) CHECK(one.witness->x == many.witness->x);
    CHECK(enumerate_splines(g, g.vertices()[0], {1e8, 1}) == enumerate_splines(g, g.vertices()[0], {1e8, 4}));
  }
}

TEST_CASE("search limits") {
  CHECK_THROWS_AS(udp_bruteforce(load_fixture("pentagon_z.graph")), CapabilityError);
  CHECK_THROWS_AS(udp_bruteforce(load_fixture("choke_point_w.graph"), {1000, 1}), SearchSpaceError);
  CHECK_THROWS_AS(enumerate_splines(load_fixture("bowtie_w.graph"), "nope"), GraphError);
}

TEST_CASE("construct_tree_spline on a Z path") {
  const auto z = Ring::integers();
  const auto g = make_graph(z, {{"u", "v", Ideal::principal(Element::integer(z, 4))},
                                {"v", "w", Ideal::principal(Element::integer(z, 6))}});
  const auto s = construct_tree_spline(g, "u", "w", Element::integer(z, 2));
  CHECK(s.values.at("w").as_integer() == 0);
  CHECK(s.values.at("v").as_integer() == 6);
  CHECK(s.values.at("u").as_integer() == 2);
  CHECK(verify_spline(g, s.values).ok);
  CHECK_THROWS_AS(construct_tree_spline(g, "u", "w", Element::integer(z, 3)), NoDecompositionError);
  CHECK_THROWS_AS(construct_tree_spline(g, "u", "u", Element::integer(z, 4)), PreconditionError);
  CHECK(construct_tree_spline(g, "u", "u", Element::integer(z, 0)).values.size() == 3);
  CHECK_THROWS_AS(construct_tree_spline(load_fixture("pentagon_z.graph"), "a", "c", Element::integer(z, 1)),
                  StructuralError);
}

TEST_CASE("construct_tree_spline on a W tree with side branches") {
  const auto g = load_fixture("square_path_holds_w.graph");
  for (const auto& x : ring_elements(udptest::W())) {
    if (!ideal_member(x, paths_intersection(g, "3", "4"))) continue;
    const auto s = construct_tree_spline(g, "3", "4", x);
    CHECK(verify_spline(g, s.values).ok);
    CHECK(s.values.at("3") - s.values.at("4") == x);
  }
}
