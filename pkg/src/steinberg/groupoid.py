"""Finite discrete groupoids.

Morphisms are dense integers ``0..n-1``; each unit is a morphism (its own
identity), so ``range`` and ``source`` map morphism indices to the indices
of unit morphisms.  Composition ``compose(g, h)`` means "g after h" and is
defined exactly when ``source(g) == range(h)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import AxiomViolation, NotABisection

UNDEFINED = -1


@dataclass(frozen=True)
class FiniteGroupoid:
    labels: tuple[str, ...]
    range: tuple[int, ...]
    source: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    name: str = field(default="", compare=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @cached_property
    def units(self) -> tuple[int, ...]:
        return tuple(g for g in range(self.n) if self.range[g] == g)

    @cached_property
    def unit_position(self) -> dict[int, int]:
        return {u: k for k, u in enumerate(self.units)}

    @cached_property
    def nonunits(self) -> tuple[int, ...]:
        return tuple(g for g in range(self.n) if self.range[g] != g)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"no morphism labelled {label!r}") from None

    def is_unit(self, g: int) -> bool:
        return self.range[g] == g

    def compose(self, g: int, h: int) -> int | None:
        gh = self.table[g][h]
        return None if gh == UNDEFINED else gh

    @cached_property
    def composable(self) -> tuple[tuple[int, int, int], ...]:
        """All triples (g, h, gh)."""
        return tuple(
            (g, h, self.table[g][h])
            for g in range(self.n)
            for h in range(self.n)
            if self.table[g][h] != UNDEFINED
        )

    @cached_property
    def _fibres(self):
        src = {u: [] for u in self.units}
        rng = {u: [] for u in self.units}
        for g in range(self.n):
            src[self.source[g]].append(g)
            rng[self.range[g]].append(g)
        return ({u: tuple(v) for u, v in src.items()}, {u: tuple(v) for u, v in rng.items()})

    def from_source(self, u: int) -> tuple[int, ...]:
        """G_u: morphisms with source u."""
        return self._fibres[0][u]

    def to_range(self, u: int) -> tuple[int, ...]:
        """G^u: morphisms with range u."""
        return self._fibres[1][u]

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<FiniteGroupoid{tag}: {self.n} morphisms, {len(self.units)} units>"


def validate(
    labels: Sequence[str],
    range_map: Mapping[str, str],
    source_map: Mapping[str, str],
    compose: Iterable[Sequence[str]],
    inverse_map: Mapping[str, str],
    name: str = "",
) -> FiniteGroupoid:
    """Check the groupoid axioms on labelled tables and index them."""
    labels = [str(x) for x in labels]
    seen = set()
    dups = [x for x in labels if x in seen or seen.add(x)]
    if dups:
        raise AxiomViolation("duplicate morphism labels", dups)
    idx = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)

    def lookup(mapping, what):
        out = []
        for lab in labels:
            if lab not in mapping:
                raise AxiomViolation(f"{what} undefined", [lab])
            tgt = str(mapping[lab])
            if tgt not in idx:
                raise AxiomViolation(f"{what} is not a listed morphism", [lab, tgt])
            out.append(idx[tgt])
        return out

    rng = lookup(range_map, "range")
    src = lookup(source_map, "source")
    inv = lookup(inverse_map, "inverse")

    table = [[UNDEFINED] * n for _ in range(n)]
    for triple in compose:
        if len(triple) != 3:
            raise AxiomViolation("compose entries must be triples", [str(t) for t in triple])
        g, h, gh = (str(t) for t in triple)
        for lab in (g, h, gh):
            if lab not in idx:
                raise AxiomViolation("compose mentions an unknown morphism", [lab])
        a, b, c = idx[g], idx[h], idx[gh]
        if table[a][b] not in (UNDEFINED, c):
            raise AxiomViolation("compose lists two results for one pair", [g, h])
        table[a][b] = c
    return _check(labels, rng, src, table, inv, name)


def _check(labels, rng, src, table, inv, name="") -> FiniteGroupoid:
    n = len(labels)
    lab = labels
    for g in range(n):
        for h in range(n):
            gh = table[g][h]
            defined = gh != UNDEFINED
            if defined != (src[g] == rng[h]):
                if defined:
                    raise AxiomViolation("compose defined with source(g) != range(h)", [lab[g], lab[h]])
                raise AxiomViolation("compose undefined although source(g) == range(h)", [lab[g], lab[h]])
            if defined and (rng[gh] != rng[g] or src[gh] != src[h]):
                raise AxiomViolation("range/source of a composite are inconsistent", [lab[g], lab[h], lab[gh]])
    units = {g for g in range(n) if table[g][g] == g}
    for g in range(n):
        if rng[g] not in units or src[g] not in units:
            raise AxiomViolation("range/source must be identities", [lab[g]])
    for u in units:
        if rng[u] != u or src[u] != u:
            raise AxiomViolation("range/source of an identity must be itself", [lab[u]])
        if inv[u] != u:
            raise AxiomViolation("an identity must be its own inverse", [lab[u]])
    for g in range(n):
        if table[rng[g]][g] != g or table[g][src[g]] != g:
            raise AxiomViolation("identity law fails", [lab[g]])
        gi = inv[g]
        if table[g][gi] != rng[g] or table[gi][g] != src[g]:
            raise AxiomViolation("bad inverse", [lab[g], lab[gi]])
    for g in range(n):
        row = table[g]
        for h in range(n):
            gh = row[h]
            if gh == UNDEFINED:
                continue
            for k in range(n):
                hk = table[h][k]
                if hk == UNDEFINED:
                    continue
                if table[gh][k] != table[g][hk]:
                    raise AxiomViolation("composition is not associative", [lab[g], lab[h], lab[k]])
    return FiniteGroupoid(
        labels=tuple(labels),
        range=tuple(rng),
        source=tuple(src),
        table=tuple(tuple(r) for r in table),
        inverse=tuple(inv),
        name=name,
    )


def from_indexed(labels, rng, src, compose_fn, inv, name="") -> FiniteGroupoid:
    """Build from index tables; ``compose_fn(g, h)`` is consulted for composable pairs."""
    n = len(labels)
    table = [[UNDEFINED] * n for _ in range(n)]
    for g in range(n):
        for h in range(n):
            if src[g] == rng[h]:
                table[g][h] = compose_fn(g, h)
    return _check(list(labels), list(rng), list(src), table, list(inv), name)


# -- structural primitives ---------------------------------------------------


def isotropy(G: FiniteGroupoid) -> frozenset[int]:
    return frozenset(g for g in range(G.n) if G.range[g] == G.source[g])


def orbits(G: FiniteGroupoid) -> list[frozenset[int]]:
    """Partition of the units; blocks ordered by their least unit."""
    seen: set[int] = set()
    blocks = []
    for u in G.units:
        if u in seen:
            continue
        block = frozenset(G.range[g] for g in G.from_source(u))
        seen |= block
        blocks.append(block)
    return blocks


def orbit_of(G: FiniteGroupoid, u: int) -> frozenset[int]:
    return frozenset(G.range[g] for g in G.from_source(u))


def is_invariant(G: FiniteGroupoid, D: Iterable[int]) -> bool:
    D = set(D)
    return all(G.range[g] in D for g in range(G.n) if G.source[g] in D)


def is_bisection(G: FiniteGroupoid, B: Iterable[int]) -> bool:
    B = list(set(B))
    return len({G.range[g] for g in B}) == len(B) == len({G.source[g] for g in B})


def require_bisection(G: FiniteGroupoid, B: Iterable[int]) -> frozenset[int]:
    B = frozenset(B)
    if not is_bisection(G, B):
        raise NotABisection(f"{sorted(G.labels[g] for g in B)} is not a bisection")
    return B


def product_set(G: FiniteGroupoid, S: Iterable[int], T: Iterable[int]) -> frozenset[int]:
    """ST = {st : s in S, t in T, source(s) == range(t)}."""
    T = list(T)
    out = set()
    for s in S:
        for t in T:
            st = G.table[s][t]
            if st != UNDEFINED:
                out.add(st)
    return frozenset(out)


# -- group tables and constructors --------------------------------------------


@dataclass(frozen=True)
class GroupTable:
    elements: tuple[str, ...]
    mul: tuple[tuple[int, ...], ...]

    @cached_property
    def identity(self) -> int:
        for e in range(len(self.elements)):
            if all(self.mul[e][x] == x and self.mul[x][e] == x for x in range(len(self.elements))):
                return e
        raise AxiomViolation("group table has no identity")

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        e = self.identity
        out = []
        for g in range(len(self.elements)):
            inv = [h for h in range(len(self.elements)) if self.mul[g][h] == e]
            if len(inv) != 1 or self.mul[inv[0]][g] != e:
                raise AxiomViolation("element has no two-sided inverse", [self.elements[g]])
            out.append(inv[0])
        return tuple(out)

    def __len__(self):
        return len(self.elements)


def group_table(elements: Sequence[Hashable], mul) -> GroupTable:
    """``mul`` is a square list of element labels (row * column) or a callable."""
    elements = [str(e) for e in elements]
    pos = {e: i for i, e in enumerate(elements)}
    if len(pos) != len(elements):
        raise AxiomViolation("duplicate group elements")
    k = len(elements)
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            v = mul(elements[i], elements[j]) if callable(mul) else mul[i][j]
            if str(v) not in pos:
                raise AxiomViolation("group table is not closed", [elements[i], elements[j]])
            row.append(pos[str(v)])
        rows.append(tuple(row))
    t = GroupTable(tuple(elements), tuple(rows))
    for a, b, c in itertools.product(range(k), repeat=3):
        if t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]]:
            raise AxiomViolation("group table is not associative", [elements[a], elements[b], elements[c]])
    t.identity, t.inverse
    return t


def cyclic_group(n: int) -> GroupTable:
    return group_table([str(k) for k in range(n)], lambda a, b: str((int(a) + int(b)) % n))


def klein_group() -> GroupTable:
    els = ["e", "a", "b", "c"]
    xor = {"e": 0, "a": 1, "b": 2, "c": 3}
    return group_table(els, lambda x, y: els[xor[x] ^ xor[y]])


def symmetric_group(n: int) -> GroupTable:
    """Permutations of 0..n-1 as tuples; product is composition (left after right)."""
    perms = list(itertools.permutations(range(n)))
    name = {p: "".join(map(str, p)) for p in perms}
    back = {v: k for k, v in name.items()}
    return group_table(
        [name[p] for p in perms],
        lambda a, b: name[tuple(back[a][back[b][i]] for i in range(n))],
    )


def pair_groupoid(n: int) -> FiniteGroupoid:
    """Morphism ``i<-j`` has source j and range i (1-based)."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    at = {p: k for k, p in enumerate(pairs)}
    labels = [f"{i}<-{j}" for i, j in pairs]
    rng = [at[(i, i)] for i, j in pairs]
    src = [at[(j, j)] for i, j in pairs]
    inv = [at[(j, i)] for i, j in pairs]
    return from_indexed(labels, rng, src, lambda g, h: at[(pairs[g][0], pairs[h][1])], inv, f"pair({n})")


def group_groupoid(t: GroupTable, name: str = "") -> FiniteGroupoid:
    k = len(t)
    e = t.identity
    return from_indexed(
        list(t.elements), [e] * k, [e] * k, lambda g, h: t.mul[g][h], list(t.inverse), name or f"group({k})"
    )


def action_groupoid(t: GroupTable, points: Sequence[Hashable], act, name: str = "") -> FiniteGroupoid:
    """Transformation groupoid: morphism ``(x,g)`` goes from x to g.x.

    ``act(g_label, x) -> point`` or a mapping ``{g_label: {x: gx}}``.
    """
    points = [str(p) for p in points]
    ppos = {p: i for i, p in enumerate(points)}
    if len(ppos) != len(points):
        raise AxiomViolation("duplicate points")
    k = len(t)

    def apply(g: int, x: int) -> int:
        lab = t.elements[g]
        y = act(lab, points[x]) if callable(act) else act[lab][points[x]]
        if str(y) not in ppos:
            raise AxiomViolation("action leaves the point set", [lab, points[x]])
        return ppos[str(y)]

    img = [[apply(g, x) for x in range(len(points))] for g in range(k)]
    for g in range(k):
        if sorted(img[g]) != list(range(len(points))):
            raise AxiomViolation("action is not by bijections", [t.elements[g]])
    for x in range(len(points)):
        if img[t.identity][x] != x:
            raise AxiomViolation("identity acts nontrivially", [points[x]])
        for g in range(k):
            for h in range(k):
                if img[t.mul[g][h]][x] != img[g][img[h][x]]:
                    raise AxiomViolation("not an action: (gh).x != g.(h.x)", [t.elements[g], t.elements[h]])

    mor = [(x, g) for x in range(len(points)) for g in range(k)]
    at = {m: i for i, m in enumerate(mor)}
    e = t.identity
    labels = [f"({points[x]},{t.elements[g]})" for x, g in mor]
    src = [at[(x, e)] for x, g in mor]
    rng = [at[(img[g][x], e)] for x, g in mor]
    inv = [at[(img[g][x], t.inverse[g])] for x, g in mor]

    def comp(a, b):
        # (y,h) after (x,g) with y = g.x is (x, hg)
        (_, h), (x, g) = mor[a], mor[b]
        return at[(x, t.mul[h][g])]

    return from_indexed(labels, rng, src, comp, inv, name or f"action({k} on {len(points)})")


def disjoint_union(G1: FiniteGroupoid, G2: FiniteGroupoid, name: str = "") -> FiniteGroupoid:
    off = G1.n
    labels = [f"1:{x}" for x in G1.labels] + [f"2:{x}" for x in G2.labels]
    rng = list(G1.range) + [r + off for r in G2.range]
    src = list(G1.source) + [s + off for s in G2.source]
    inv = list(G1.inverse) + [i + off for i in G2.inverse]

    def comp(a, b):
        if a < off:
            return G1.table[a][b]
        return G2.table[a - off][b - off] + off

    return from_indexed(labels, rng, src, comp, inv, name or f"{G1.name or 'G1'} + {G2.name or 'G2'}")


def isotropy_bundle(tables: Sequence[GroupTable], name: str = "") -> FiniteGroupoid:
    """Disjoint union of group groupoids; unit k carries ``tables[k]``."""
    mor = [(u, g) for u, t in enumerate(tables) for g in range(len(t))]
    at = {m: i for i, m in enumerate(mor)}
    labels = [f"{tables[u].elements[g]}@{u + 1}" for u, g in mor]
    rng = [at[(u, tables[u].identity)] for u, g in mor]
    inv = [at[(u, tables[u].inverse[g])] for u, g in mor]

    def comp(a, b):
        (u, g), (_, h) = mor[a], mor[b]
        return at[(u, tables[u].mul[g][h])]

    return from_indexed(labels, rng, list(rng), comp, inv, name or f"bundle({','.join(str(len(t)) for t in tables)})")
