import pytest

from steinberg.algebra import is_simple_algebra
from steinberg.catalogue import graph_catalogue, groupoid_catalogue
from steinberg.check import is_effective, is_minimal, is_topologically_principal
from steinberg.errors import AxiomViolation, NotAGroup, NotBijective
from steinberg.exel_vershik import (
    deaconu_renault,
    finite_system,
    full_action,
    is_group,
    is_ore,
    make_monoid,
    monoid_from_group,
    prop75_crosscheck,
    transformation_groupoid,
)
from steinberg.graph import graph_simplicity_verdict, is_topologically_free, make_graph
from steinberg.groupoid import cyclic_group, isotropy, validate

Z2 = monoid_from_group(cyclic_group(2))
Z3 = monoid_from_group(cyclic_group(3))


def test_groups_are_ore():
    assert is_ore(Z2) and is_group(Z2)


def test_commutative_cancellative_monoid_is_ore():
    M = make_monoid(range(4), lambda a, b: (int(a) + int(b)) % 4)
    assert is_ore(M)


def test_non_cancellative_monoid():
    M = make_monoid(["e", "a", "b"], [["e", "a", "b"], ["a", "a", "a"], ["b", "b", "b"]])
    v = is_ore(M)
    assert not v
    side, a, (b, c) = v.witness
    ia, ib, ic = M.index(a), M.index(b), M.index(c)
    assert side == "left-cancel" and ib != ic and M.mul(ia, ib) == M.mul(ia, ic)
    assert M.mul(M.index("a"), M.index("a")) == M.mul(M.index("a"), M.index("b"))
    assert not is_group(M)


def test_monoid_validation():
    with pytest.raises(AxiomViolation):
        make_monoid(["e", "a"], [["e", "a"], ["a", "x"]])
    with pytest.raises(AxiomViolation):
        make_monoid(["a", "b"], [["a", "a"], ["b", "a"]])


def swap():
    return finite_system(Z2, ["1", "2"], {"1": {"1": "2", "2": "1"}}, "swap")


def test_transformation_groupoid_examples():
    G = transformation_groupoid(swap())
    assert G.n == 4 and is_effective(G) and is_minimal(G) and is_simple_algebra(G).simple
    T = transformation_groupoid(finite_system(Z2, ["1"], {"1": {"1": "1"}}))
    assert T.n == 2 and not is_simple_algebra(T).simple
    R = transformation_groupoid(finite_system(Z3, "123", {"1": {"1": "2", "2": "3", "3": "1"}}))
    assert is_topologically_principal(R) and is_minimal(R) and is_simple_algebra(R).simple


def test_transformation_groupoid_errors():
    M = make_monoid(["e", "a"], [["e", "a"], ["a", "a"]])
    with pytest.raises(NotAGroup):
        transformation_groupoid(finite_system(M, ["1"], {"a": {"1": "1"}}))
    with pytest.raises(NotBijective):
        transformation_groupoid(finite_system(Z2, ["1", "2"], {"1": {"1": "1", "2": "1"}}))
    with pytest.raises(NotAGroup):
        transformation_groupoid(deaconu_renault(make_graph(["v"], [("e", "v", "v")])))


def test_full_action_rejects_non_actions():
    # 1 + 1 = 0 in Z/2, but this map is not an involution
    bad = finite_system(Z2, "123", {"1": {"1": "2", "2": "3", "3": "1"}})
    with pytest.raises(AxiomViolation):
        full_action(bad)


@pytest.mark.parametrize("entry", [e for e in groupoid_catalogue() if e.system], ids=lambda e: e.name)
def test_stabilizers_are_isotropy(entry):
    S = entry.system
    G = entry.groupoid
    validate(G.labels, {G.labels[g]: G.labels[G.range[g]] for g in range(G.n)},
             {G.labels[g]: G.labels[G.source[g]] for g in range(G.n)},
             [[G.labels[a], G.labels[b], G.labels[c]] for a, b, c in G.composable],
             {G.labels[g]: G.labels[G.inverse[g]] for g in range(G.n)})
    full = full_action(S)
    fixed = sum(1 for m in full.values() for x, y in m.items() if x == y)
    assert fixed == len(isotropy(G))
    r = prop75_crosscheck(S)
    assert r.case == "group" and r.agree


def test_deaconu_renault_examples():
    loop = deaconu_renault(make_graph(["v"], [("e", "v", "v")]))
    assert not is_topologically_free(loop.space, 1, 0)
    rose = deaconu_renault(make_graph(["v"], [("a", "v", "v"), ("b", "v", "v")]))
    assert is_topologically_free(rose.space, 1, 0)
    assert graph_simplicity_verdict(rose.space).simple


def test_crosscheck_examples():
    r = prop75_crosscheck(swap())
    assert r.topologically_free and r.groupoid_side and r.agree
    r = prop75_crosscheck(finite_system(Z2, ["1"], {"1": {"1": "1"}}))
    assert not r.topologically_free and not r.groupoid_side and r.agree
    r = prop75_crosscheck(deaconu_renault(make_graph(["v"], [("e", "v", "v")])))
    assert not r.topologically_free and not r.groupoid_side and r.agree


@pytest.mark.parametrize("entry", graph_catalogue(), ids=lambda e: e.name)
def test_shift_crosscheck(entry):
    r = prop75_crosscheck(deaconu_renault(entry.graph))
    assert r.agree and r.details["oracle_agrees"]
