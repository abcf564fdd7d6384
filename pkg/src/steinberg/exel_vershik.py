"""Semigroup actions and their groupoids: group actions on finite sets and
the shift on the boundary paths of a graph (monoid = naturals)."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Mapping, Sequence, Union

from .check import Verdict, is_topologically_principal
from .errors import AxiomViolation, NotAGroup, NotBijective
from .graph import DirectedGraph, condition_L, exitless_cycles, is_topologically_free, topologically_free_oracle
from .groupoid import FiniteGroupoid, GroupTable, action_groupoid, group_table

NATURALS = "naturals"
SHIFT = "shift"


@dataclass(frozen=True)
class FiniteMonoid:
    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def index(self, label: str) -> int:
        return self.elements.index(str(label))

    def __len__(self):
        return len(self.elements)


def make_monoid(elements: Sequence[Hashable], mul) -> FiniteMonoid:
    """``mul`` is a square table of labels (row times column) or a callable."""
    elements = tuple(str(e) for e in elements)
    pos = {e: i for i, e in enumerate(elements)}
    if len(pos) != len(elements):
        raise AxiomViolation("duplicate monoid elements")
    k = len(elements)
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            v = str(mul(elements[i], elements[j]) if callable(mul) else mul[i][j])
            if v not in pos:
                raise AxiomViolation("monoid table is not closed", [elements[i], elements[j]])
            row.append(pos[v])
        rows.append(tuple(row))
    for a, b, c in itertools.product(range(k), repeat=3):
        if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
            raise AxiomViolation("monoid table is not associative", [elements[a], elements[b], elements[c]])
    for e in range(k):
        if all(rows[e][x] == x and rows[x][e] == x for x in range(k)):
            return FiniteMonoid(elements, tuple(rows), e)
    raise AxiomViolation("monoid table has no identity")


def monoid_from_group(t: GroupTable) -> FiniteMonoid:
    return FiniteMonoid(t.elements, t.mul, t.identity)


def is_ore(M: FiniteMonoid) -> Verdict:
    """Cancellative, and any two elements have a common left multiple.

    Witnesses: ("left-cancel", a, (b, c)) when ab = ac with b != c,
    ("right-cancel", a, (b, c)) when ba = ca, ("ore", m, n) otherwise.
    """
    k = len(M)
    lab = M.elements
    for a in range(k):
        for b, c in itertools.combinations(range(k), 2):
            if M.mul(a, b) == M.mul(a, c):
                return Verdict(False, ("left-cancel", lab[a], (lab[b], lab[c])))
            if M.mul(b, a) == M.mul(c, a):
                return Verdict(False, ("right-cancel", lab[a], (lab[b], lab[c])))
    for m, n in itertools.product(range(k), repeat=2):
        left_m = {M.mul(p, m) for p in range(k)}
        if not any(M.mul(q, n) in left_m for q in range(k)):
            return Verdict(False, ("ore", lab[m], lab[n]))
    return Verdict(True)


def is_group(M: FiniteMonoid) -> Verdict:
    for g in range(len(M)):
        if not any(M.mul(g, h) == M.identity and M.mul(h, g) == M.identity for h in range(len(M))):
            return Verdict(False, M.elements[g])
    return Verdict(True)


@dataclass(frozen=True)
class ExelVershikSystem:
    """Either a finite monoid acting on a finite point set, or the shift.

    For the finite case ``action`` maps monoid element labels to
    ``{point: image}``; only generators need to be listed, the rest follows
    from T^{mn} = T^m T^n.  For the shift case monoid is ``"naturals"``,
    space is a DirectedGraph and action is ``"shift"``.
    """

    monoid: Union[FiniteMonoid, str]
    space: Union[tuple[str, ...], DirectedGraph]
    action: Union[Mapping[str, Mapping[str, str]], str]
    name: str = field(default="", compare=False)

    @property
    def is_shift(self) -> bool:
        return self.monoid == NATURALS


def finite_system(monoid: FiniteMonoid, points: Sequence[Hashable], generators: Mapping, name: str = "") -> ExelVershikSystem:
    points = tuple(str(p) for p in points)
    action = {str(g): {str(x): str(y) for x, y in m.items()} for g, m in generators.items()}
    return ExelVershikSystem(monoid, points, action, name)


def deaconu_renault(E: DirectedGraph) -> ExelVershikSystem:
    """The shift on boundary paths; every graph operation applies to ``space``."""
    return ExelVershikSystem(NATURALS, E, SHIFT, E.name)


def full_action(S: ExelVershikSystem) -> dict[str, dict[str, str]]:
    """Close the generator maps under composition, checking consistency."""
    M = S.monoid
    if S.is_shift or not isinstance(M, FiniteMonoid):
        raise ValueError("full_action needs a finite monoid")
    points = list(S.space)
    pset = set(points)
    maps: dict[int, tuple[int, ...]] = {M.identity: tuple(range(len(points)))}
    ppos = {p: i for i, p in enumerate(points)}
    gens = {}
    for g, m in S.action.items():
        gi = M.index(g)
        if set(m) != pset or not set(m.values()) <= pset:
            raise AxiomViolation(f"action of {g} must map every point into the space", [g])
        gens[gi] = tuple(ppos[m[p]] for p in points)
    for gi, img in gens.items():
        if gi in maps and maps[gi] != img:
            raise AxiomViolation("identity must act trivially", [M.elements[gi]])
        maps[gi] = img
    todo = deque(maps)
    while todo:
        h = todo.popleft()
        for g, img in gens.items():
            gh = M.mul(g, h)
            comp = tuple(img[x] for x in maps[h])
            if gh in maps:
                if maps[gh] != comp:
                    raise AxiomViolation("not an action: T^(gh) != T^g T^h", [M.elements[g], M.elements[h]])
            else:
                maps[gh] = comp
                todo.append(gh)
    missing = [M.elements[g] for g in range(len(M)) if g not in maps]
    if missing:
        raise AxiomViolation("generators do not reach every monoid element", missing)
    for g, h in itertools.product(range(len(M)), repeat=2):
        if maps[M.mul(g, h)] != tuple(maps[g][x] for x in maps[h]):
            raise AxiomViolation("not an action: T^(gh) != T^g T^h", [M.elements[g], M.elements[h]])
    return {M.elements[g]: {points[x]: points[y] for x, y in enumerate(img)} for g, img in sorted(maps.items())}


def transformation_groupoid(S: ExelVershikSystem) -> FiniteGroupoid:
    """Morphisms (y, g) from y to g.y for a group acting by bijections."""
    if S.is_shift:
        raise NotAGroup("the shift system has monoid = naturals")
    M = S.monoid
    grp = is_group(M)
    if not grp:
        raise NotAGroup(f"{grp.witness} has no inverse")
    for g, m in S.action.items():
        if len(set(m.values())) != len(m):
            raise NotBijective(f"T^{g} is not injective")
    full = full_action(S)
    t = group_table(M.elements, [[M.elements[x] for x in row] for row in M.table])
    return action_groupoid(t, S.space, full, S.name or "transformation groupoid")


def action_is_free(S: ExelVershikSystem) -> Verdict:
    """Pointwise reading of topological freeness on a discrete space: no
    g other than the identity fixes any point.  Witness: (g, x)."""
    full = full_action(S)
    e = S.monoid.elements[S.monoid.identity]
    for g, m in full.items():
        if g == e:
            continue
        for x, y in m.items():
            if x == y:
                return Verdict(False, (g, x))
    return Verdict(True)


@dataclass
class CrossCheckReport:
    case: str
    topologically_free: bool
    groupoid_side: bool
    agree: bool
    details: dict = field(default_factory=dict)


def prop75_crosscheck(S: ExelVershikSystem, bound: int = 4) -> CrossCheckReport:
    """Compare topological freeness with the groupoid-side condition.

    Group case: freeness of the action versus topological principality of
    the transformation groupoid.  Shift case: is_topologically_free over
    all 0 <= n < m <= bound (and its enumeration oracle) versus condition
    (L).  A disagreement is a defect, never an expected outcome.
    """
    if S.is_shift:
        E = S.space
        pairs = [(m, n) for m in range(1, bound + 1) for n in range(m)]
        exact = {p: is_topologically_free(E, *p) for p in pairs}
        oracle = {p: topologically_free_oracle(E, *p) for p in pairs}
        free = all(exact.values())
        L = condition_L(E)
        details = {
            "pairs": pairs,
            "failing_pairs": [p for p, v in exact.items() if not v],
            "oracle_agrees": exact == oracle,
            "exitless_cycles": exitless_cycles(E),
        }
        agree = free == bool(L) and exact == oracle
        return CrossCheckReport("shift", free, bool(L), agree, details)
    G = transformation_groupoid(S)
    free = action_is_free(S)
    principal = is_topologically_principal(G)
    details = {} if free else {"fixed": free.witness}
    return CrossCheckReport("group", bool(free), principal, bool(free) == principal, details)
