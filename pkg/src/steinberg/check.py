"""Effective / topologically principal / minimal, in the discrete topology.

In a finite discrete groupoid every subset is open, so "interior of
Iso(G) minus units is empty" means "there is no nonunit isotropy" and a
dense set of units is the whole unit space.  The two isotropy conditions
therefore coincide here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ComplexityRefusal, EmptyGroupoid
from .groupoid import FiniteGroupoid, is_invariant, isotropy, orbits

SUBSET_SEARCH_LIMIT = 16


@dataclass
class Verdict:
    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds


@dataclass
class CriterionReport:
    effective: bool
    topologically_principal: bool
    minimal: bool
    witnesses: dict = field(default_factory=dict)


def is_effective(G: FiniteGroupoid) -> Verdict:
    """Witness: the first nonunit isotropy morphism, if any."""
    for g in sorted(isotropy(G)):
        if not G.is_unit(g):
            return Verdict(False, g)
    return Verdict(True)


def is_topologically_principal(G: FiniteGroupoid) -> bool:
    return all(len(trivial_isotropy_group(G, u)) == 1 for u in G.units)


def trivial_isotropy_group(G: FiniteGroupoid, u: int) -> tuple[int, ...]:
    return tuple(g for g in G.from_source(u) if G.range[g] == u)


def is_minimal(G: FiniteGroupoid) -> Verdict:
    """Witness: the first orbit block, a proper nonempty invariant set."""
    if not G.units:
        raise EmptyGroupoid("groupoid has no units")
    blocks = orbits(G)
    if len(blocks) == 1:
        return Verdict(True)
    return Verdict(False, blocks[0])


def report(G: FiniteGroupoid) -> CriterionReport:
    eff = is_effective(G)
    mini = is_minimal(G)
    tp = is_topologically_principal(G)
    witnesses = {}
    if not eff:
        witnesses["effective"] = eff.witness
    if not tp:
        witnesses["topologically_principal"] = next(
            u for u in G.units if len(trivial_isotropy_group(G, u)) > 1
        )
    if not mini:
        witnesses["minimal"] = mini.witness
    return CriterionReport(bool(eff), tp, bool(mini), witnesses)


def lemma31_condition3(G: FiniteGroupoid) -> bool:
    """Every nonempty bisection inside G minus units has an arrow with r != s.

    Checking singletons suffices: any bisection of pure isotropy contains a
    singleton one, and every singleton is a bisection.
    """
    return all(G.range[g] != G.source[g] for g in G.nonunits)


def _bad_masks(G: FiniteGroupoid, U: list[int]) -> dict[int, int]:
    """For each nonempty V within U (bitmask over U), the nonunits meeting VKV."""
    pos = {g: k for k, g in enumerate(G.nonunits)}
    upos = {u: k for k, u in enumerate(U)}
    out = {}
    for vmask in range(1, 1 << len(U)):
        bad = 0
        for g, k in pos.items():
            r, s = upos.get(G.range[g]), upos.get(G.source[g])
            if r is not None and s is not None and (vmask >> r) & 1 and (vmask >> s) & 1:
                bad |= 1 << k
        out[vmask] = bad
    return out


def _subsets_smallest_first(k: int):
    for size in range(1, k + 1):
        for combo in itertools.combinations(range(k), size):
            yield sum(1 << i for i in combo)


def lemma31_condition4(G: FiniteGroupoid, K, U) -> frozenset[int] | None:
    """Smallest nonempty V within U with VKV empty, or None.

    K is a set of nonunit morphisms, U a nonempty set of units.
    """
    U = sorted(set(U))
    K = set(K)
    if not U:
        raise ValueError("U must be nonempty")
    if K & set(G.units):
        raise ValueError("K must avoid the units")
    if len(U) > SUBSET_SEARCH_LIMIT:
        raise ComplexityRefusal(f"|U| = {len(U)} exceeds {SUBSET_SEARCH_LIMIT}")
    pos = {g: k for k, g in enumerate(G.nonunits)}
    kmask = sum(1 << pos[g] for g in K)
    bad = _bad_masks(G, U)
    for vmask in _subsets_smallest_first(len(U)):
        if not bad[vmask] & kmask:
            return frozenset(U[i] for i in range(len(U)) if (vmask >> i) & 1)
    return None


def lemma31_condition4_universal(G: FiniteGroupoid, max_units: int = 8, max_nonunits: int = 20) -> Verdict:
    """Does lemma31_condition4 find a set for every K and every U with |U| <= max_units?

    Enumerates every subset K of the nonunits literally.  Witness on failure
    is the offending (K, U).
    """
    nu = len(G.nonunits)
    if nu > max_nonunits:
        raise ComplexityRefusal(f"{nu} nonunits exceeds {max_nonunits}")
    units = list(G.units)
    for size in range(1, min(max_units, len(units)) + 1):
        for U in itertools.combinations(units, size):
            bad = sorted(_bad_masks(G, list(U)).values(), key=lambda b: bin(b).count("1"))
            for kmask in range(1 << nu):
                for b in bad:
                    if not b & kmask:
                        break
                else:
                    K = frozenset(G.nonunits[i] for i in range(nu) if (kmask >> i) & 1)
                    return Verdict(False, (K, frozenset(U)))
    return Verdict(True)


def invariant_sets_meet_trivial_isotropy(G: FiniteGroupoid) -> bool:
    """Every nonempty invariant unit set contains a unit with trivial isotropy.

    Enumerated over unions of orbit blocks, which are exactly the invariant
    sets.
    """
    blocks = orbits(G)
    trivial = {u for u in G.units if len(trivial_isotropy_group(G, u)) == 1}
    for size in range(1, len(blocks) + 1):
        for combo in itertools.combinations(blocks, size):
            D = frozenset().union(*combo)
            assert is_invariant(G, D)
            if not D & trivial:
                return False
    return True
