#include <doctest.h>

#include "support.hpp"
#include "udpkit/analysis.hpp"
#include "udpkit/errors.hpp"
#include "udpkit/generate.hpp"

using namespace udpkit;
using udptest::load_fixture;
using udptest::make_graph;
using udptest::we;
using udptest::wi;

TEST_CASE("structural rules by graph shape") {
  CHECK(udp_structural(load_fixture("square_path_holds_w.graph")).rule == rules::kTree);
  CHECK(udp_structural(load_fixture("pentagon_z.graph")).rule == rules::kCycle);
  CHECK(udp_structural(load_fixture("spline_pentagon_zpoly.graph")).status == UdpStatus::Holds);

  const auto w = udptest::W();
  // Two parallel edges already count as a cycle; three only have PEDPP.
  const LabeledGraph pair(w, {"a", "b"}, {{"p", "a", "b", wi("x")}, {"q", "a", "b", wi("y")}});
  CHECK(udp_structural(pair).rule == rules::kCycle);
  const LabeledGraph bundle(w, {"a", "b"},
                            {{"p", "a", "b", wi("x")}, {"q", "a", "b", wi("y")}, {"r", "a", "b", wi("x+y")}});
  const auto pedpp = udp_structural(bundle);
  CHECK(pedpp.status == UdpStatus::Holds);
  CHECK(pedpp.rule == rules::kPedpp);
  CHECK(udp_bruteforce(bundle).status == UdpStatus::Holds);

  const auto bowtie = udp_structural(load_fixture("bowtie_w.graph"));
  CHECK(bowtie.status == UdpStatus::Undecided);
  CHECK(bowtie.rule == rules::kNoRule);

  const auto p = Ring::polynomials();
  const auto zp = make_graph(p, {{"1", "2", parse_ideal(p, "<x>")},
                                 {"2", "3", parse_ideal(p, "<2>")},
                                 {"3", "4", parse_ideal(p, "<x>")},
                                 {"4", "2", parse_ideal(p, "<3>")}});
  const auto gated = udp_structural(zp);
  CHECK(gated.status == UdpStatus::Undecided);
  CHECK(gated.rule == rules::kCapability);
}

TEST_CASE("unicyclic check finds the failing pair") {
  const auto g = load_fixture("unicyclic_counterexample_w.graph");
  const auto v = udp_structural(g);
  REQUIRE(v.status == UdpStatus::Fails);
  CHECK(v.rule == rules::kUnicyclic);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->u == "u");
  CHECK(v.witness->w == "w");
  CHECK(v.witness->x == we("y"));
  CHECK(v.witness->certified);
  CHECK(reverify_witness(g, v));

  CHECK(unicyclic_check(load_fixture("choke_point_w.graph")).status == UdpStatus::Holds);
  CHECK(unicyclic_check(load_fixture("square_holds_w.graph")).rule == rules::kCycle);
  CHECK_THROWS_AS(unicyclic_check(load_fixture("bowtie_w.graph")), StructuralError);
}

TEST_CASE("unicyclic check over Z") {
  CHECK(unicyclic_check(load_fixture("cycle_with_trees_z.graph")).status == UdpStatus::Holds);
  const auto z = Ring::integers();
  auto ideal = [&](int n) { return Ideal::principal(Element::integer(z, n)); };
  const auto g = make_graph(z, {{"u", "c", ideal(3)}, {"c", "a", ideal(2)}, {"a", "w", ideal(2)},
                                {"c", "b", ideal(5)}, {"b", "w", ideal(5)}});
  // The W counterexample shape with I = <3>, J = <2>, K = <5>. Z is a Prüfer domain, so it holds.
  CHECK(unicyclic_check(g).status == UdpStatus::Holds);
}

TEST_CASE("pasting condition") {
  const auto g = load_fixture("unicyclic_counterexample_w.graph");
  const auto check = pasting_condition(g, "z", {"u"}, {"a", "w", "b"});
  CHECK_FALSE(check.holds);
  CHECK(check.u == "u");
  CHECK(check.w == "w");
  CHECK(*check.lhs == wi("xy"));
  CHECK(*check.rhs == wi("x"));

  const auto ok = pasting_condition(load_fixture("choke_point_w.graph"), "w", {"u", "a", "b", "c", "d"}, {"f", "v"});
  CHECK(ok.holds);
  CHECK(ok.pairs == 10);

  CHECK_THROWS_AS(pasting_condition(g, "a", {"u"}, {"w"}), PreconditionError);
  CHECK_THROWS_AS(pasting_condition(g, "z", {"u", "a"}, {"a"}), PreconditionError);
}

TEST_CASE("subdivision transfer keeps the witness pair") {
  const auto g = load_fixture("unicyclic_counterexample_w.graph");
  const auto verdict = udp_bruteforce(g);
  const std::vector<SubdivisionStep> plan = {{"za", 2}, {"uz", 3}};
  const auto moved = subdivision_transfer(g, verdict, plan);
  CHECK(moved.status == UdpStatus::Fails);
  CHECK(moved.rule == rules::kSubdivision);
  CHECK(moved.witness->u == "u");
  CHECK(moved.witness->w == "w");
  const auto sub = subdivide_labeled(g, plan).graph;
  CHECK(reverify_witness(sub, moved));
  CHECK(udp_bruteforce(sub).status == UdpStatus::Fails);
  CHECK(subdivision_transfer(g, verdict, {}).rule == rules::kBruteForce);
  CHECK_THROWS_AS(subdivision_transfer(g, udp_bruteforce(load_fixture("square_holds_w.graph")), plan),
                  PreconditionError);
}

TEST_CASE("counterexample builders reproduce the fixtures") {
  const auto uc = build_unicyclic_counterexample(wi("x"), wi("y"), wi("x+y"));
  CHECK(uc.graph == load_fixture("unicyclic_counterexample_w.graph"));
  CHECK(uc.z == "z");
  CHECK_THROWS_AS(build_unicyclic_counterexample(wi("x"), wi("x"), wi("y")), PreconditionError);

  const auto triple = find_diamond_triple(udptest::W());
  REQUIRE(triple.has_value());
  CHECK(triple->i == wi("x"));
  CHECK(triple->j == wi("y"));
  CHECK(triple->k == wi("x+y"));
  CHECK(build_diamond_multigraph(wi("x"), wi("y"), wi("x+y")).graph == load_fixture("diamond_multigraph_w.graph"));
  const auto dg = build_diamond_counterexample(wi("x"), wi("y"), wi("x+y"));
  CHECK(dg.graph == load_fixture("diamond_w.graph"));
  CHECK(dg.u == "u");
  CHECK(dg.w == "v");
  CHECK_THROWS_AS(build_diamond_counterexample(wi("x"), wi("x"), wi("y")), PreconditionError);
  CHECK_FALSE(find_diamond_triple(Ring::modular(36)).has_value());

  CHECK(build_prufer_graph(wi("x"), wi("y"), wi("x+y")).graph == load_fixture("triangle_pendant_w.graph"));
}

TEST_CASE("construct_failing_labeling") {
  const auto w = udptest::W();
  const auto bowtie = construct_failing_labeling(load_fixture("bowtie_w.graph").skeleton(), w);
  const auto v = udp_bruteforce(bowtie.graph);
  CHECK(v.status == UdpStatus::Fails);
  CHECK(achievable_differences(bowtie.graph, bowtie.u, bowtie.w).size() <
        udptest::index_set(paths_intersection(bowtie.graph, bowtie.u, bowtie.w)).size());

  CHECK_THROWS_AS(construct_failing_labeling(load_fixture("square_holds_w.graph").skeleton(), w), StructuralError);
  CHECK_THROWS_AS(construct_failing_labeling(load_fixture("square_path_holds_w.graph").skeleton(), w),
                  StructuralError);
  CHECK_THROWS_AS(construct_failing_labeling(load_fixture("diamond_multigraph_w.graph").skeleton(), w),
                  PreconditionError);
  const auto skel = load_fixture("bowtie_w.graph").skeleton();
  CHECK_THROWS_AS(construct_failing_labeling(skel, Ring::modular(12)), ObstructionError);
  CHECK_THROWS_AS(construct_failing_labeling(skel, Ring::integers()), ObstructionError);
}

TEST_CASE("obstruction report") {
  const auto report = check_prufer_obstruction(udptest::W());
  REQUIRE(report.triple.has_value());
  REQUIRE(report.graph.has_value());
  REQUIRE(report.verdict.has_value());
  CHECK(report.verdict->status == UdpStatus::Fails);
  CHECK(reverify_witness(report.graph->graph, *report.verdict));

  const auto none = check_prufer_obstruction(Ring::modular(60));
  CHECK_FALSE(none.triple.has_value());
  CHECK_FALSE(none.graph.has_value());
  CHECK_THROWS_AS(check_prufer_obstruction(Ring::integers()), CapabilityError);
}
