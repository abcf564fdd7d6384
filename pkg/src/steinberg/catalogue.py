"""Built-in worked examples with their expected verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property
from typing import Callable, Optional

from .exel_vershik import ExelVershikSystem, finite_system, monoid_from_group, transformation_groupoid
from .graph import DirectedGraph, disjoint_union_graph, make_graph
from .groupoid import (
    FiniteGroupoid,
    cyclic_group,
    disjoint_union,
    group_groupoid,
    isotropy_bundle,
    klein_group,
    pair_groupoid,
    symmetric_group,
)


@dataclass(frozen=True)
class GroupoidEntry:
    name: str
    make: Callable[[], FiniteGroupoid]
    effective: bool
    minimal: bool
    family: str
    system: Optional[ExelVershikSystem] = None

    @property
    def simple(self) -> bool:
        return self.effective and self.minimal

    @cached_property
    def groupoid(self) -> FiniteGroupoid:
        return self.make()


@dataclass(frozen=True)
class GraphEntry:
    name: str
    graph: DirectedGraph
    condition_L: bool
    cofinal: bool
    finite_model: Optional[str] = None  # name of a groupoid entry modelling the same system

    @property
    def simple(self) -> bool:
        return self.condition_L and self.cofinal


def _rotation(n: int, k: int) -> dict:
    """Z/n acting on k points by rotation (k divides n); generator 1."""
    return {"1": {str(x): str((x + 1) % k) for x in range(k)}}


def _action_entry(name, table, points, generators, effective, minimal) -> GroupoidEntry:
    S = finite_system(monoid_from_group(table), points, generators, name)
    return GroupoidEntry(name, lambda: transformation_groupoid(S), effective, minimal, "action", S)


def _named(G: FiniteGroupoid, name: str) -> FiniteGroupoid:
    return FiniteGroupoid(G.labels, G.range, G.source, G.table, G.inverse, name)


@cache
def groupoid_catalogue() -> tuple[GroupoidEntry, ...]:
    Z1, Z2, Z3 = cyclic_group(1), cyclic_group(2), cyclic_group(3)
    S3 = symmetric_group(3)
    swap = {"1": {"0": "1", "1": "0"}}
    entries = [
        GroupoidEntry(f"pair{n}", lambda n=n: pair_groupoid(n), True, True, "pair") for n in range(1, 5)
    ]
    entries += [
        GroupoidEntry("group-Z2", lambda: group_groupoid(Z2, "group-Z2"), False, True, "group"),
        GroupoidEntry("group-Z3", lambda: group_groupoid(Z3, "group-Z3"), False, True, "group"),
        GroupoidEntry("group-Klein", lambda: group_groupoid(klein_group(), "group-Klein"), False, True, "group"),
        GroupoidEntry("group-S3", lambda: group_groupoid(S3, "group-S3"), False, True, "group"),
        _action_entry("Z2-swap-2", Z2, ["0", "1"], swap, True, True),
        _action_entry("Z2-trivial-1", Z2, ["0"], {"1": {"0": "0"}}, False, True),
        _action_entry("Z3-rotate-3", Z3, ["0", "1", "2"], _rotation(3, 3), True, True),
        _action_entry("Z4-rotate-4", cyclic_group(4), list("0123"), _rotation(4, 4), True, True),
        _action_entry("Z4-rotate-2", cyclic_group(4), ["0", "1"], _rotation(4, 2), False, True),
        _action_entry("Z6-rotate-3", cyclic_group(6), ["0", "1", "2"], _rotation(6, 3), False, True),
        _action_entry(
            "S3-permute-3", S3, ["0", "1", "2"],
            {"102": {"0": "1", "1": "0", "2": "2"}, "120": {"0": "1", "1": "2", "2": "0"}},
            False, True,
        ),
        _action_entry("Z2-swap-fix-3", Z2, ["0", "1", "2"], {"1": {"0": "1", "1": "0", "2": "2"}}, False, False),
        _action_entry(
            "Z2-double-swap-4", Z2, list("0123"), {"1": {"0": "1", "1": "0", "2": "3", "3": "2"}}, True, False
        ),
        _action_entry(
            "Klein-on-2", klein_group(), ["0", "1"],
            {"a": {"0": "1", "1": "0"}, "b": {"0": "0", "1": "1"}},
            False, True,
        ),
        GroupoidEntry("bundle-Z2-Z1", lambda: isotropy_bundle([Z2, Z1], "bundle-Z2-Z1"), False, False, "bundle"),
        GroupoidEntry("bundle-Z2-Z3", lambda: isotropy_bundle([Z2, Z3], "bundle-Z2-Z3"), False, False, "bundle"),
        GroupoidEntry("bundle-Z2-Z2", lambda: isotropy_bundle([Z2, Z2], "bundle-Z2-Z2"), False, False, "bundle"),
        GroupoidEntry("bundle-Z1-Z1", lambda: isotropy_bundle([Z1, Z1], "bundle-Z1-Z1"), True, False, "bundle"),
        GroupoidEntry(
            "union-pair2-pair2",
            lambda: disjoint_union(pair_groupoid(2), pair_groupoid(2), "union-pair2-pair2"),
            True, False, "union",
        ),
        GroupoidEntry(
            "union-pair3-pair1",
            lambda: disjoint_union(pair_groupoid(3), pair_groupoid(1), "union-pair3-pair1"),
            True, False, "union",
        ),
        GroupoidEntry(
            "union-pair2-Z2",
            lambda: disjoint_union(pair_groupoid(2), group_groupoid(Z2), "union-pair2-Z2"),
            False, False, "union",
        ),
    ]
    return tuple(entries)


@cache
def graph_catalogue() -> tuple[GraphEntry, ...]:
    loop = make_graph(["v"], [("e", "v", "v")], "loop")
    rose2 = make_graph(["v"], [("a", "v", "v"), ("b", "v", "v")], "rose2")
    rose3 = make_graph(["v"], [("a", "v", "v"), ("b", "v", "v"), ("c", "v", "v")], "rose3")
    cycle2 = make_graph(["1", "2"], [("e", "1", "2"), ("f", "2", "1")], "cycle2")
    cycle3 = make_graph(["1", "2", "3"], [("e", "1", "2"), ("f", "2", "3"), ("g", "3", "1")], "cycle3")
    chord = make_graph(["1", "2"], [("e", "1", "2"), ("f", "2", "1"), ("c", "1", "1")], "cycle2-chord")
    toeplitz = make_graph(["v", "w"], [("a", "v", "v"), ("b", "v", "w"), ("c", "w", "w")], "loop-into-loop")
    escape = make_graph(
        ["1", "2", "3"],
        [("e", "1", "2"), ("f", "2", "1"), ("g", "2", "3"), ("h", "3", "3")],
        "cycle-exit-to-loop",
    )
    golden = make_graph(["u", "v"], [("a", "u", "u"), ("b", "u", "v"), ("c", "v", "u")], "golden-mean")
    parallel = make_graph(["v", "w"], [("e", "v", "w"), ("f", "v", "w"), ("g", "w", "v")], "parallel-return")
    reverse = make_graph(["v", "w"], [("a", "v", "v"), ("b", "w", "v"), ("c", "w", "w")], "loop-from-loop")
    tail_rose = make_graph(["w", "v"], [("t", "w", "v"), ("a", "v", "v"), ("b", "v", "v")], "tail-into-rose")
    tail_loop = make_graph(["w", "v"], [("t", "w", "v"), ("e", "v", "v")], "tail-into-loop")
    return (
        GraphEntry("loop", loop, False, True, "Z2-trivial-1"),
        GraphEntry("rose2", rose2, True, True),
        GraphEntry("rose3", rose3, True, True),
        GraphEntry("cycle2", cycle2, False, True, "Z4-rotate-2"),
        GraphEntry("cycle3", cycle3, False, True, "Z6-rotate-3"),
        GraphEntry("cycle2-chord", chord, True, True),
        GraphEntry("loop-into-loop", toeplitz, False, False),
        GraphEntry("cycle-exit-to-loop", escape, False, False),
        GraphEntry("golden-mean", golden, True, True),
        GraphEntry("parallel-return", parallel, True, True),
        GraphEntry("loop-from-loop", reverse, False, False),
        GraphEntry("tail-into-rose", tail_rose, True, True),
        GraphEntry("tail-into-loop", tail_loop, False, True),
        GraphEntry("two-loops", disjoint_union_graph(loop, loop, "two-loops"), False, False, "bundle-Z2-Z2"),
        GraphEntry("two-roses", disjoint_union_graph(rose2, rose2, "two-roses"), True, False),
    )


def find_groupoid(name: str) -> GroupoidEntry:
    for e in groupoid_catalogue():
        if e.name == name:
            return e
    raise KeyError(name)


def find_graph(name: str) -> GraphEntry:
    for e in graph_catalogue():
        if e.name == name:
            return e
    raise KeyError(name)
