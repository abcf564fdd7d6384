import pytest

from steinberg.check import (
    is_effective,
    is_minimal,
    is_topologically_principal,
    lemma31_condition3,
    lemma31_condition4,
    lemma31_condition4_universal,
    invariant_sets_meet_trivial_isotropy,
    report,
)
from steinberg.errors import ComplexityRefusal, EmptyGroupoid
from steinberg.groupoid import (
    FiniteGroupoid,
    action_groupoid,
    cyclic_group,
    disjoint_union,
    group_groupoid,
    is_invariant,
    isotropy,
    isotropy_bundle,
    pair_groupoid,
)


Z2 = cyclic_group(2)
SWAP = action_groupoid(Z2, ["1", "2"], {"0": {"1": "1", "2": "2"}, "1": {"1": "2", "2": "1"}})


def test_effective_examples():
    assert is_effective(pair_groupoid(3))
    v = is_effective(group_groupoid(Z2))
    assert not v and v.witness == 1
    assert is_effective(SWAP)


def test_principal_examples():
    assert is_topologically_principal(pair_groupoid(2))
    assert not is_topologically_principal(isotropy_bundle([Z2, Z2]))


def test_minimal_examples():
    assert all(is_minimal(pair_groupoid(n)) for n in range(1, 5))
    U = disjoint_union(pair_groupoid(1), pair_groupoid(1))
    v = is_minimal(U)
    assert not v and v.witness == {U.units[0]}
    assert is_minimal(group_groupoid(Z2))


def test_minimal_rejects_empty():
    empty = FiniteGroupoid((), (), (), (), ())
    with pytest.raises(EmptyGroupoid):
        is_minimal(empty)


def test_condition3_examples():
    assert not lemma31_condition3(group_groupoid(Z2))
    assert lemma31_condition3(pair_groupoid(2))


def test_condition4_examples():
    G = pair_groupoid(3)
    U = set(G.units)
    assert lemma31_condition4(G, set(), U) == {min(U)}  # smallest first: any singleton works for K empty
    Zg = group_groupoid(Z2)
    assert lemma31_condition4(Zg, {1}, {0}) is None


def test_condition4_returns_valid_sets(groupoid_entry):
    G = groupoid_entry.groupoid
    K = set(G.nonunits[:3])
    V = lemma31_condition4(G, K, G.units)
    if V is not None:
        assert V and V <= set(G.units)
        assert not any(G.range[k] in V and G.source[k] in V for k in K)


def test_condition4_guard():
    G = isotropy_bundle([cyclic_group(1)] * 17)
    with pytest.raises(ComplexityRefusal):
        lemma31_condition4(G, set(), G.units)


def test_universal_condition4_witness_is_genuine():
    G = isotropy_bundle([Z2, cyclic_group(1)])
    v = lemma31_condition4_universal(G)
    assert not v
    K, U = v.witness
    assert lemma31_condition4(G, K, U) is None


def test_equivalences_on_catalogue(groupoid_entry):
    G = groupoid_entry.groupoid
    eff = bool(is_effective(G))
    assert eff == groupoid_entry.effective
    assert eff == lemma31_condition3(G) == bool(lemma31_condition4_universal(G))
    assert eff == (isotropy(G) == set(G.units))
    assert eff == is_topologically_principal(G) == invariant_sets_meet_trivial_isotropy(G)
    assert bool(is_minimal(G)) == groupoid_entry.minimal


def test_minimal_iff_no_proper_invariant_subset(groupoid_entry):
    import itertools

    G = groupoid_entry.groupoid
    units = list(G.units)
    proper = [
        set(D) for k in range(1, len(units)) for D in itertools.combinations(units, k) if is_invariant(G, D)
    ]
    assert bool(is_minimal(G)) == (not proper)


def test_report_witnesses():
    r = report(disjoint_union(pair_groupoid(2), group_groupoid(Z2)))
    assert not r.effective and not r.minimal and not r.topologically_principal
    assert set(r.witnesses) == {"effective", "minimal", "topologically_principal"}
