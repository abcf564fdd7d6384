from steinberg.catalogue import find_graph, find_groupoid, graph_catalogue, groupoid_catalogue
from steinberg.check import is_effective, is_minimal
from steinberg.graph import condition_L, graph_simplicity_verdict, is_cofinal


def test_catalogue_sizes_and_families():
    gs = groupoid_catalogue()
    assert len(gs) >= 20 and len(graph_catalogue()) >= 10
    assert {"pair", "group", "action", "bundle", "union"} <= {e.family for e in gs}
    assert [find_groupoid(f"pair{n}").groupoid.n for n in range(1, 5)] == [1, 4, 9, 16]
    assert find_graph("loop") and find_graph("rose2")


def test_names_are_unique():
    names = [e.name for e in groupoid_catalogue()] + [e.name for e in graph_catalogue()]
    assert len(names) == len(set(names))


def test_groupoid_expectations(groupoid_entry):
    G = groupoid_entry.groupoid
    assert bool(is_effective(G)) == groupoid_entry.effective
    assert bool(is_minimal(G)) == groupoid_entry.minimal


def test_graph_expectations(graph_entry):
    E = graph_entry.graph
    assert bool(condition_L(E)) == graph_entry.condition_L
    assert bool(is_cofinal(E)) == graph_entry.cofinal
    assert graph_simplicity_verdict(E).simple == graph_entry.simple
    if graph_entry.finite_model:
        assert find_groupoid(graph_entry.finite_model).simple == graph_entry.simple
