"""Exact matrix representations of the Steinberg algebra of a finite groupoid."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .algebra import AlgebraElement
from .errors import NotInvariant
from .gaussian import ONE, ZERO, GaussianRational
from .groupoid import FiniteGroupoid, is_invariant, orbit_of, orbits, require_bisection
from .linalg import Echelon

Matrix = list[list[GaussianRational]]
Entries = tuple[tuple[int, int, GaussianRational], ...]


@dataclass(frozen=True)
class Representation:
    """Linear map delta_g -> matrix, stored sparsely per morphism."""

    groupoid: FiniteGroupoid
    kind: str
    basis: tuple[int, ...]
    basis_labels: tuple[str, ...]
    entries: tuple[Entries, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def matrix(self, g: int) -> Matrix:
        m = zero_matrix(self.dimension)
        for i, j, v in self.entries[g]:
            m[i][j] = m[i][j] + v
        return m

    def image(self, f: AlgebraElement) -> Matrix:
        m = zero_matrix(self.dimension)
        for g, c in enumerate(f.coeffs):
            if c:
                for i, j, v in self.entries[g]:
                    m[i][j] = m[i][j] + c * v
        return m

    def __call__(self, f: AlgebraElement) -> Matrix:
        return self.image(f)


def zero_matrix(d: int) -> Matrix:
    return [[ZERO] * d for _ in range(d)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    d = len(a)
    out = zero_matrix(d)
    for i in range(d):
        ai = a[i]
        oi = out[i]
        for k in range(d):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(d):
                    if bk[j]:
                        oi[j] = oi[j] + x * bk[j]
    return out


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def adjoint(a: Matrix) -> Matrix:
    d = len(a)
    return [[a[j][i].conjugate() for j in range(d)] for i in range(d)]


def to_numpy(a: Matrix) -> np.ndarray:
    return np.array([[complex(x) for x in row] for row in a], dtype=complex).reshape(len(a), len(a))


def operator_norm(a: Matrix) -> float:
    if not a:
        return 0.0
    return float(np.linalg.norm(to_numpy(a), 2))


def _sparse(d: dict) -> Entries:
    return tuple((i, j, v) for (i, j), v in sorted(d.items()) if v)


def _partial_permutation_rep(G: FiniteGroupoid, W: Sequence[int], kind: str) -> Representation:
    """delta_g sends basis vector s(g) to r(g) when s(g) lies in W."""
    pos = {u: k for k, u in enumerate(W)}
    entries = []
    for g in range(G.n):
        s, r = G.source[g], G.range[g]
        if s in pos:
            entries.append(((pos[r], pos[s], ONE),))
        else:
            entries.append(())
    return Representation(G, kind, tuple(W), tuple(G.labels[u] for u in W), tuple(entries))


def rep_free_module(G: FiniteGroupoid, W: Iterable[int] | None = None) -> Representation:
    """pi_W on the free module with basis the invariant unit set W."""
    W = sorted(G.units if W is None else set(W))
    if not set(W) <= set(G.units):
        raise NotInvariant("W must consist of units")
    if not is_invariant(G, W):
        raise NotInvariant(f"{[G.labels[u] for u in W]} is not invariant")
    return _partial_permutation_rep(G, W, "free")


def partial_permutation(G: FiniteGroupoid, W: Sequence[int], B: Iterable[int]) -> Matrix:
    """t_B: the endomorphism extending f_B|W, built from the bisection itself.

    f_B(s(x)) = r(x) for x in B and f_B vanishes off s(B); this does not go
    through the linear extension of a representation.
    """
    B = require_bisection(G, B)
    pos = {u: k for k, u in enumerate(W)}
    f_B = {G.source[x]: G.range[x] for x in B}
    m = zero_matrix(len(W))
    for u in W:
        if u in f_B:
            m[pos[f_B[u]]][pos[u]] = ONE
    return m


def kernel_dimension(rep: Representation) -> int:
    """dim of {f : rep(f) = 0}, by exact rank of the images of the deltas."""
    G = rep.groupoid
    d = rep.dimension
    ech = Echelon(d * d)
    for g in range(G.n):
        vec = [ZERO] * (d * d)
        for i, j, v in rep.entries[g]:
            vec[i * d + j] = vec[i * d + j] + v
        ech.add(vec)
    return G.n - ech.rank


def rep_orbit(G: FiniteGroupoid, u: int) -> Representation:
    """pi_[u](f) delta_v = sum over g in G_v of f(g) delta_{r(g)}, v in the orbit of u."""
    if not G.is_unit(u):
        raise ValueError(f"{G.labels[u]} is not a unit")
    return _partial_permutation_rep(G, sorted(orbit_of(G, u)), "orbit")


def rep_regular(G: FiniteGroupoid, u: int) -> Representation:
    """Left convolution on functions over G_u.

    Ind_u(f) delta_x = sum over y in G_u of f(y x^-1) delta_y.
    """
    if not G.is_unit(u):
        raise ValueError(f"{G.labels[u]} is not a unit")
    basis = list(G.from_source(u))
    pos = {x: k for k, x in enumerate(basis)}
    entries = []
    for g in range(G.n):
        # delta_g * delta_x = delta_{gx} when defined
        e = {}
        for x in basis:
            gx = G.compose(g, x)
            if gx is not None:
                e[(pos[gx], pos[x])] = ONE
        entries.append(_sparse(e))
    return Representation(G, "regular", tuple(basis), tuple(G.labels[x] for x in basis), tuple(entries))


def rep_augmentation(G: FiniteGroupoid) -> Representation:
    """Direct sum of pi_[u], one u per orbit (the least unit index)."""
    blocks = [rep_orbit(G, min(b)) for b in orbits(G)]
    basis = []
    entries = [dict() for _ in range(G.n)]
    off = 0
    for rep in blocks:
        basis.extend(rep.basis)
        for g in range(G.n):
            for i, j, v in rep.entries[g]:
                entries[g][(i + off, j + off)] = v
        off += rep.dimension
    return Representation(
        G, "augmentation", tuple(basis), tuple(G.labels[u] for u in basis), tuple(_sparse(e) for e in entries)
    )
