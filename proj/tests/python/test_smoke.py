from pathlib import Path

import pytest

import udpkit

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def fixture(name):
    return udpkit.Graph.load(str(FIXTURES / name))


@pytest.fixture
def w():
    return udpkit.Ring.witness()


def test_ring_and_ideals(w):
    ideals = udpkit.all_ideals(w)
    assert [str(i) for i in ideals] == ["<0>", "<x>", "<y>", "<x+y>", "<x, y>", "<1>"]
    x, y, xy = (udpkit.parse_ideal(w, s) for s in ("<x>", "<y>", "<x+y>"))
    assert str(x + y) == "<x, y>"
    assert (x & y).is_zero()
    assert not udpkit.is_distributive_triple(x, y, xy)
    assert udpkit.find_nondistributive_triple(udpkit.Ring.modular(12)) is None
    assert udpkit.parse_element(w, "x") in x
    assert udpkit.parse_element(w, "y") not in x


def test_parse_errors(w):
    with pytest.raises(udpkit.ParseError):
        udpkit.parse_ring("nonsense")
    with pytest.raises(udpkit.UdpkitError):
        udpkit.parse_ideal(w, "<z>")


def test_graph_round_trip():
    g = fixture("bowtie_w.graph")
    assert udpkit.Graph.parse(g.serialize()) == g
    assert g.is_simple()
    assert len(g.edges) == 6


def test_spline_verification():
    path = str(FIXTURES / "spline_pentagon_zpoly.graph")
    g = udpkit.Graph.load(path)
    (spline,) = udpkit.load_splines(path)
    ok, failing = udpkit.verify_spline(g, spline)
    assert ok and failing == []
    spline["2"] = "6*x+x"
    ok, failing = udpkit.verify_spline(g, spline)
    assert not ok and failing == ["e23"]


def test_unicyclic_counterexample_fails():
    g = fixture("unicyclic_counterexample_w.graph")
    brute = udpkit.udp_bruteforce(g)
    assert brute.status == "fails"
    u, w_, x, certified = brute.witness
    assert (u, w_, str(x), certified) == ("u", "w", "y", True)
    assert udpkit.reverify_witness(g, brute)
    assert udpkit.udp_structural(g).status == "fails"
    assert [str(e) for e in udpkit.achievable_differences(g, "u", "w")] == ["0", "x"]
    assert str(udpkit.paths_intersection(g, "u", "w")) == "<x, y>"


def test_structure_and_rules():
    assert udpkit.classify_structure(fixture("square_path_holds_w.graph")) == "tree"
    assert udpkit.udp_structural(fixture("pentagon_z.graph")).status == "holds"
    assert udpkit.udp_structural(fixture("bowtie_w.graph")).status == "undecided"
    assert "w" in udpkit.choke_points(fixture("choke_point_w.graph"), "u", "v")
    with pytest.raises(udpkit.CapabilityError):
        udpkit.udp_bruteforce(fixture("pentagon_z.graph"))


def test_tree_spline():
    z = udpkit.Ring.integers()
    g = udpkit.Graph.parse("ring z\nvertex u\nvertex v\nvertex w\nedge e1 u v <4>\nedge e2 v w <6>\n")
    values = udpkit.construct_tree_spline(g, "u", "w", udpkit.parse_element(z, "2"))
    assert udpkit.verify_spline(g, values)[0]
    assert int(values["u"]) - int(values["w"]) == 2


def test_builders_and_surgery(w):
    i, j, k = (udpkit.parse_ideal(w, s) for s in ("<x>", "<y>", "<x+y>"))
    graph, u, w_, z = udpkit.build_unicyclic_counterexample(i, j, k)
    assert graph == fixture("unicyclic_counterexample_w.graph")
    sub = udpkit.subdivide(graph, [("za", 2)])
    assert len(sub.vertices) == len(graph.vertices) + 1
    assert udpkit.udp_bruteforce(sub).status == "fails"
    reduced = udpkit.reduce_multigraph(fixture("diamond_multigraph_w.graph"))
    assert reduced == fixture("diamond_reduced_w.graph")
    report = udpkit.check_prufer_obstruction(w)
    assert report["verdict"].status == "fails"


def test_census_and_cli(w):
    census = udpkit.run_census(w, max_vertices=3)
    assert census["discrepancies"] == 0
    assert census["fails_other"] == 0
    code, out, _ = udpkit.run_cli(["check-udp", str(FIXTURES / "square_holds_w.graph"), "--method", "both"])
    assert code == 0
    code, _, _ = udpkit.run_cli(["check-udp", str(FIXTURES / "diamond_w.graph")])
    assert code == 1
    code, _, _ = udpkit.run_cli(["no-such-command"])
    assert code == 2
