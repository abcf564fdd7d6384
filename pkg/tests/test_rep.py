import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from steinberg.algebra import AlgebraElement, i_norm, indicator, involute, kernel_element_for_isotropy, random_element
from steinberg.check import is_effective
from steinberg.errors import NotABisection, NotInvariant
from steinberg.gaussian import ONE, ZERO
from steinberg.groupoid import cyclic_group, disjoint_union, group_groupoid, isotropy, orbits, pair_groupoid
from steinberg.rep import (
    adjoint,
    kernel_dimension,
    matadd,
    matmul,
    operator_norm,
    partial_permutation,
    rep_augmentation,
    rep_free_module,
    rep_orbit,
    rep_regular,
    to_numpy,
    zero_matrix,
)

from strategies import GROUPOIDS, gaussians

KINDS = {
    "free": lambda G: rep_free_module(G),
    "orbit": lambda G: rep_orbit(G, G.units[0]),
    "regular": lambda G: rep_regular(G, G.units[-1]),
    "augmentation": rep_augmentation,
}


def test_free_module_of_pair_groupoid_is_matrix_units():
    G = pair_groupoid(2)
    rho = rep_free_module(G)
    g = G.index("1<-2")
    assert rho.matrix(g) == [[ZERO, ONE], [ZERO, ZERO]]
    assert kernel_dimension(rho) == 0


def test_group_representations():
    G = group_groupoid(cyclic_group(2))
    assert kernel_dimension(rep_free_module(G)) == 1
    assert kernel_dimension(rep_regular(G, G.units[0])) == 0
    assert rep_orbit(G, G.units[0]).dimension == 1


def test_free_module_needs_invariant_set():
    G = disjoint_union(pair_groupoid(2), pair_groupoid(1))
    u = G.units[0]
    with pytest.raises(NotInvariant):
        rep_free_module(G, [u])
    block = sorted(orbits(G), key=len)[0]
    assert rep_free_module(G, block).dimension == 1


@pytest.mark.parametrize("kind", sorted(KINDS))
@pytest.mark.parametrize("entry", GROUPOIDS, ids=lambda e: e.name)
def test_homomorphism_and_star(entry, kind):
    G = entry.groupoid
    rho = KINDS[kind](G)
    rng = random.Random(13)
    for _ in range(5):
        f, g = random_element(G, rng), random_element(G, rng)
        assert rho(f * g) == matmul(rho(f), rho(g))
        assert rho(f + g) == matadd(rho(f), rho(g))
        assert rho(involute(f)) == adjoint(rho(f))


@pytest.mark.parametrize("entry", GROUPOIDS, ids=lambda e: e.name)
def test_partial_permutation_rows(entry):
    # t_B has at most one 1 in every row and column
    G = entry.groupoid
    W = sorted(G.units)
    rng = random.Random(1)
    for _ in range(20):
        B = {rng.randrange(G.n) for _ in range(rng.randint(0, 3))}
        try:
            m = partial_permutation(G, W, B)
        except NotABisection:
            continue
        for row in m:
            assert sum(1 for x in row if x) <= 1
        for j in range(len(W)):
            assert sum(1 for row in m if row[j]) <= 1
        assert m == rep_free_module(G)(indicator(G, B))


@pytest.mark.parametrize("entry", GROUPOIDS, ids=lambda e: e.name)
def test_free_module_faithful_iff_effective(entry):
    G = entry.groupoid
    assert (kernel_dimension(rep_free_module(G)) == 0) == bool(is_effective(G))


@pytest.mark.parametrize("entry", GROUPOIDS, ids=lambda e: e.name)
def test_regular_norm_below_i_norm(entry):
    G = entry.groupoid
    rng = random.Random(4)
    for u in G.units[:2]:
        rho = rep_regular(G, u)
        for _ in range(10):
            f = random_element(G, rng)
            assert operator_norm(rho(f)) <= i_norm(f).value + 1e-9


@pytest.mark.parametrize("entry", GROUPOIDS, ids=lambda e: e.name)
def test_augmentation_annihilates_isotropy_kernel(entry):
    G = entry.groupoid
    eps = rep_augmentation(G)
    assert eps.dimension == len(G.units)
    rng = random.Random(9)
    iso = [g for g in isotropy(G) if not G.is_unit(g)]
    for g in iso[:3]:
        k = kernel_element_for_isotropy(G, [g], AlgebraElement.delta(G, g, rng.randint(1, 3)))
        assert not k.is_zero()
        assert eps(k) == zero_matrix(eps.dimension)


@given(st.data())
def test_augmentation_faithful_on_units(data):
    G = data.draw(st.sampled_from(GROUPOIDS)).groupoid
    coeffs = data.draw(st.lists(gaussians, min_size=len(G.units), max_size=len(G.units)))
    f = AlgebraElement.from_mapping(G, {G.labels[u]: c for u, c in zip(G.units, coeffs)})
    assert f.is_zero() == (rep_augmentation(G)(f) == zero_matrix(len(G.units)))


def test_operator_norm_matches_numpy_svd():
    G = pair_groupoid(3)
    f = random_element(G, random.Random(0))
    m = rep_free_module(G)(f)
    assert operator_norm(m) == pytest.approx(max(np.linalg.svd(to_numpy(m), compute_uv=False)))
