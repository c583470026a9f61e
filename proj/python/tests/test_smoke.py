import os
from pathlib import Path

import pytest

import sltr

FIXTURES = Path(os.environ.get("SLTR_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))


def graph(name):
    return sltr.Graph.load(str(FIXTURES / f"{name}.graph"))


def test_graph_roundtrip():
    g = graph("prism")
    assert (g.num_vertices, g.num_edges, g.num_faces) == (6, 9, 5)
    assert g.num_vertices - g.num_edges + g.num_faces == 2
    assert g.internally_3connected()
    again = sltr.Graph.parse(g.serialize())
    assert again.rotation == g.rotation
    assert again.suspensions == g.suspensions


def test_faa_counts():
    assert len(sltr.faas(graph("prism"))) == 2
    assert sltr.faas(graph("cube")) == []
    assert len(sltr.faas(graph("bad7"))) == 4


def test_check_and_sltr_agree():
    for name in ["prism", "bad7", "prism_quad"]:
        g = graph(name)
        for faa in sltr.faas(g):
            combinatorial = sltr.check(g, faa)["ok"]
            assert sltr.sltr(g, faa)["good"] == combinatorial
            assert sltr.check(g, faa, mode="simple")["ok"] == combinatorial


def test_bad_faa_has_witness():
    g = graph("bad7")
    bad = [f for f in sltr.faas(g) if not sltr.check(g, f)["ok"]]
    assert len(bad) == 1
    assert len(sltr.check(g, bad[0])["witness_walk"]) >= 3


def test_sltr_drawing():
    g = graph("prism")
    faa = g.parse_faa((FIXTURES / "faa" / "prism.faa").read_text())
    assert len(faa) == 3
    r = sltr.sltr(g, faa)
    assert r["good"] and r["report"]["all_pass"]
    assert len(r["positions"]) == 6
    assert r["residual"] < 1e-9
    assert r["svg"].startswith("<?xml")
    assert sltr.sltr(g, faa, seed=3)["good"]


def test_tutte_drawing():
    r = sltr.sltr(graph("octahedron"))
    assert r["good"] and r["report"]["all_faces_triangles"]


def test_schnyder_and_dissection():
    g = graph("cube")
    wood = sltr.schnyder(g)
    assert wood["ok"]
    assert len(wood["edges"]) == g.num_edges
    pd = sltr.primal_dual(g)
    assert pd["ok"]
    assert len(pd["triangles"]) == g.num_vertices + g.num_faces - 1
    assert {t[0] for t in pd["triangles"]} == {"vertex", "face"}
    assert sltr.medial_roundtrip(g)


def test_stretch():
    ok = sltr.stretch((FIXTURES / "stretchable.arr").read_text())
    assert ok["stretchable"] and ok["contacts_preserved"]
    no = sltr.stretch((FIXTURES / "not_stretchable.arr").read_text())
    assert not no["stretchable"]
    assert len(no["extremal"]) <= 2


def test_errors():
    with pytest.raises(sltr.Error) as info:
        sltr.Graph.parse("sltr-graph 9\nend\n")
    assert info.value.kind == "ParseError"
    assert info.value.line == 1
    with pytest.raises(sltr.Error) as info:
        sltr.faas(graph("bad7"), budget=1)
    assert info.value.kind == "BudgetExceeded"
    with pytest.raises(sltr.Error) as info:
        sltr.schnyder(sltr.Graph.from_rotation([[1, 3, 2], [2, 3, 0], [0, 3, 1], [0, 1, 2]], (1, 0), [0, 1, 3]))
    assert info.value.kind == "InvalidSuspensions"
