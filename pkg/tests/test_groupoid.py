import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from steinberg.errors import AxiomViolation
from steinberg.groupoid import (
    action_groupoid,
    cyclic_group,
    disjoint_union,
    group_groupoid,
    is_bisection,
    is_invariant,
    isotropy,
    isotropy_bundle,
    orbit_of,
    orbits,
    pair_groupoid,
    product_set,
    validate,
)

from strategies import GROUPOIDS

Z2 = cyclic_group(2)


def labels(G, gs):
    return {G.labels[g] for g in gs}


def test_validate_pair_tables():
    units = ["a", "b"]
    G = validate(
        ["a", "b", "ab", "ba"],
        {"a": "a", "b": "b", "ab": "a", "ba": "b"},
        {"a": "a", "b": "b", "ab": "b", "ba": "a"},
        [["a", "a", "a"], ["b", "b", "b"], ["ab", "b", "ab"], ["a", "ab", "ab"], ["ba", "a", "ba"],
         ["b", "ba", "ba"], ["ab", "ba", "a"], ["ba", "ab", "b"]],
        {"a": "a", "b": "b", "ab": "ba", "ba": "ab"},
    )
    assert G.n == 4 and labels(G, G.units) == set(units)


def test_validate_group_table():
    G = validate(["e", "g"], {"e": "e", "g": "e"}, {"e": "e", "g": "e"},
                 [["e", "e", "e"], ["e", "g", "g"], ["g", "e", "g"], ["g", "g", "e"]], {"e": "e", "g": "g"})
    assert labels(G, G.units) == {"e"}


def test_validate_rejects_composition_across_mismatched_ends():
    with pytest.raises(AxiomViolation):
        validate(["a", "b"], {"a": "a", "b": "b"}, {"a": "a", "b": "b"},
                 [["a", "a", "a"], ["b", "b", "b"], ["a", "b", "a"]], {"a": "a", "b": "b"})


def test_validate_rejects_duplicates_and_bad_inverse():
    with pytest.raises(AxiomViolation):
        validate(["a", "a"], {"a": "a"}, {"a": "a"}, [], {"a": "a"})
    with pytest.raises(AxiomViolation):
        validate(["e", "g"], {"e": "e", "g": "e"}, {"e": "e", "g": "e"},
                 [["e", "e", "e"], ["e", "g", "g"], ["g", "e", "g"], ["g", "g", "g"]], {"e": "e", "g": "g"})


def test_validate_rejects_non_associative_table():
    # a loop that is not a group: 3 elements with identity, x*y = y*x = e, x*x = y, y*y = x
    # but tweak it so (xx)y != x(xy)
    els = ["e", "x", "y"]
    table = {("e", a): a for a in els} | {(a, "e"): a for a in els}
    table |= {("x", "x"): "e", ("y", "y"): "e", ("x", "y"): "x", ("y", "x"): "y"}
    compose = [[a, b, c] for (a, b), c in table.items()]
    with pytest.raises(AxiomViolation):
        validate(els, {a: "e" for a in els}, {a: "e" for a in els}, compose, {"e": "e", "x": "x", "y": "y"})


def test_isotropy_examples():
    P2 = pair_groupoid(2)
    assert isotropy(P2) == set(P2.units)
    G2 = group_groupoid(Z2)
    assert isotropy(G2) == set(range(2))
    U = disjoint_union(P2, G2)
    expected = {U.index("1:" + P2.labels[u]) for u in P2.units} | {U.index("2:0"), U.index("2:1")}
    assert isotropy(U) == expected


def test_orbit_examples():
    assert len(orbits(pair_groupoid(3))) == 1
    U = disjoint_union(group_groupoid(Z2), group_groupoid(cyclic_group(3)))
    assert [len(b) for b in orbits(U)] == [1, 1]
    swap = action_groupoid(Z2, ["1", "2"], {"0": {"1": "1", "2": "2"}, "1": {"1": "2", "2": "1"}})
    assert len(orbits(swap)) == 1 and len(orbits(swap)[0]) == 2


def test_invariance_examples():
    P2 = pair_groupoid(2)
    assert is_invariant(P2, [])
    assert not is_invariant(P2, [P2.units[0]])
    assert is_invariant(P2, P2.units)


def test_constructor_shapes():
    assert pair_groupoid(2).n == 4 and len(pair_groupoid(2).units) == 2
    swap = action_groupoid(Z2, ["1", "2"], lambda g, x: x if g == "0" else {"1": "2", "2": "1"}[x])
    assert swap.n == 4 and isotropy(swap) == set(swap.units)
    B = isotropy_bundle([Z2, Z2])
    assert B.n == 4 and isotropy(B) == set(range(4))


@pytest.mark.parametrize("entry", GROUPOIDS, ids=lambda e: e.name)
def test_structural_invariants(entry):
    G = entry.groupoid
    for g in range(G.n):
        assert G.inverse[G.inverse[g]] == g
        assert G.range[G.inverse[g]] == G.source[g]
    iso = isotropy(G)
    for g, h in itertools.product(iso, repeat=2):
        gh = G.compose(g, h)
        assert gh is None or gh in iso
    assert all(G.inverse[g] in iso for g in iso)
    blocks = orbits(G)
    assert sorted(u for b in blocks for u in b) == sorted(G.units)
    for b in blocks:
        assert is_invariant(G, b)
        # minimal: no nonempty proper subset is invariant
        for k in range(1, len(b)):
            for sub in itertools.combinations(sorted(b), k):
                assert not is_invariant(G, sub)
    for u in G.units:
        assert orbit_of(G, u) == {G.range[g] for g in G.from_source(u)}


@pytest.mark.parametrize("entry", GROUPOIDS[:12], ids=lambda e: e.name)
def test_invariant_iff_union_of_blocks(entry):
    G = entry.groupoid
    blocks = orbits(G)
    units = list(G.units)
    for k in range(len(units) + 1):
        for D in itertools.combinations(units, k):
            D = set(D)
            union = all(b <= D or not (b & D) for b in blocks)
            assert is_invariant(G, D) == union


@given(st.data())
def test_bisection_iff_injective_ends(data):
    entry = data.draw(st.sampled_from(GROUPOIDS))
    G = entry.groupoid
    B = data.draw(st.sets(st.integers(0, G.n - 1), max_size=4))
    rng = {G.range[g] for g in B}
    src = {G.source[g] for g in B}
    assert is_bisection(G, B) == (len(B) == len(rng) == len(src))


@given(st.data())
def test_product_of_bisections_is_bisection(data):
    G = data.draw(st.sampled_from(GROUPOIDS)).groupoid
    B = data.draw(st.sets(st.integers(0, G.n - 1), max_size=4))
    D = data.draw(st.sets(st.integers(0, G.n - 1), max_size=4))
    if is_bisection(G, B) and is_bisection(G, D):
        assert is_bisection(G, product_set(G, B, D))
