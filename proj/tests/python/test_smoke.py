import json

import pytest

import colreconf as cr


def test_base_instance():
    g = cr.instance_graph(1)
    assert (g.n, g.m) == (16, 100)
    assert cr.find_induced(g, "2k2") is None
    assert cr.find_induced(g, "p5") is None
    assert cr.chromatic_number(g) == 7
    assert cr.clique_number(g) == 7


def test_colourings_on_paper_graph():
    bundle = cr.build_base()
    g = cr.instance_graph(1)
    alpha, beta = bundle["alpha"], bundle["beta"]
    assert alpha["k"] == 7 and beta["k"] == 8
    assert cr.is_proper(g, alpha["assignment"], 7)
    assert cr.is_frozen(g, beta["assignment"], 8)
    assert cr.neighbours(g, beta["assignment"], 8) == []
    comp = cr.component_of(g, beta["assignment"], 8, 10)
    assert comp == {"explored_fully": True, "size": 1, "frozen": True}


def test_verify_reports():
    r1 = cr.verify(1)
    assert r1["pass"] is True
    assert [c["status"] for c in r1["checks"]] == ["pass"] * 7
    r2 = cr.verify(2)
    assert r2["pass"] is True and r2["vertices"] == 32
    bundle = json.dumps(cr.build_family(1))
    assert cr.verify_bundle(bundle) == r1


def test_small_graph_operations():
    k3 = cr.complete_graph(3)
    nodes, edges = cr.build_reconfig(k3, 3)
    assert len(nodes) == 6 and edges == []
    verdict = cr.is_mixing(k3, 3)
    assert verdict["connected"] is False and verdict["components"] == 6
    assert cr.is_mixing(cr.complete_graph(2), 3)["connected"] is True
    assert cr.count_colourings(cr.cycle(4), 3) == 18
    assert cr.enumerate_colourings(cr.cycle(4), 2) == [[1, 2, 1, 2], [2, 1, 2, 1]]
    assert cr.neighbours(cr.complete_graph(2), [1, 2], 3) == [[3, 2], [1, 3]]
    assert cr.find_induced(cr.path_graph(6), "P5") == [0, 1, 2, 3, 4]
    h = cr.power(cr.cycle(16), 4)
    assert (h.m, cr.chromatic_number(h), cr.clique_number(h)) == (64, 6, 5)
    assert cr.join(cr.Graph(2), cr.Graph(2)).m == 4
    frozen = cr.find_frozen(k3, 3, 10)
    assert len(frozen["frozen"]) == 6 and frozen["exhaustive"] is True


def test_formats_and_errors():
    g = cr.parse_edge_list("3 2\n0 1\n1 2\n")
    assert g == cr.path_graph(3)
    assert cr.parse_dimacs(g.dimacs()) == g
    with pytest.raises(ValueError, match="line 3"):
        cr.parse_edge_list("3 2\n0 1\n1 x\n")
    with pytest.raises(ValueError):
        cr.cycle(2)
    with pytest.raises(ValueError):
        cr.is_frozen(cr.complete_graph(2), [1, 1], 2)
    with pytest.raises(RuntimeError):
        cr.chromatic_number(cr.cycle(80))
