"""Exact linear algebra over Q(i).

Vectors are stored internally as a pair of integer lists (real parts,
imaginary parts) scaled to clear denominators; row operations are
fraction-free, so no rational arithmetic happens in the inner loops.
"""

from __future__ import annotations

from math import gcd, lcm
from typing import Iterable, Sequence

from .gaussian import GaussianRational, ZERO

IntVec = tuple[list[int], list[int]]


def to_intvec(v: Sequence[GaussianRational]) -> IntVec:
    """Scale a Q(i) vector to a primitive Gaussian-integer vector (same span)."""
    den = 1
    for z in v:
        if z:
            den = lcm(den, z.denominator)
    re = []
    im = []
    for z in v:
        a, b = z.numerator
        k = den // z.denominator
        re.append(a * k)
        im.append(b * k)
    return _primitive(re, im)


def from_intvec(iv: IntVec) -> list[GaussianRational]:
    re, im = iv
    return [GaussianRational._raw(a, b, 1) for a, b in zip(re, im)]


def _primitive(re: list[int], im: list[int]) -> IntVec:
    g = gcd(*re, *im)
    if g > 1:
        re = [x // g for x in re]
        im = [x // g for x in im]
    return re, im


def is_zero(iv: IntVec) -> bool:
    re, im = iv
    return not any(re) and not any(im)


class Echelon:
    """Row-echelon basis of a subspace of Q(i)^n, grown one vector at a time.

    Each stored row has a positive integer at its pivot column and zeros
    before it.
    """

    def __init__(self, n: int):
        self.n = n
        self._rows: dict[int, IntVec] = {}
        self._order: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def rows(self) -> list[IntVec]:
        return [self._rows[p] for p in self._order]

    def pivots(self) -> list[int]:
        return list(self._order)

    def reduce(self, iv: IntVec) -> IntVec:
        re, im = list(iv[0]), list(iv[1])
        n = self.n
        for p in self._order:
            cr, ci = re[p], im[p]
            if not cr and not ci:
                continue
            rr, ri = self._rows[p]
            piv = rr[p]
            if piv != 1:
                for j in range(p):
                    re[j] *= piv
                    im[j] *= piv
            for j in range(p, n):
                xr, xi = rr[j], ri[j]
                if xr or xi:
                    re[j] = piv * re[j] - (cr * xr - ci * xi)
                    im[j] = piv * im[j] - (cr * xi + ci * xr)
                else:
                    re[j] *= piv
                    im[j] *= piv
            re, im = _primitive(re, im)
        return re, im

    def add_int(self, iv: IntVec) -> bool:
        re, im = self.reduce(iv)
        for q in range(self.n):
            if re[q] or im[q]:
                break
        else:
            return False
        # multiply by the conjugate of the pivot so the pivot is |z|^2 > 0
        cr, ci = re[q], -im[q]
        nre = [a * cr - b * ci for a, b in zip(re, im)]
        nim = [a * ci + b * cr for a, b in zip(re, im)]
        row = _primitive(nre, nim)
        self._rows[q] = row
        self._order.append(q)
        self._order.sort()
        return True

    def add(self, v: Sequence[GaussianRational]) -> bool:
        """Insert v; returns True when v was independent of the span."""
        return self.add_int(to_intvec(v))

    def contains_int(self, iv: IntVec) -> bool:
        return is_zero(self.reduce(iv))

    def contains(self, v: Sequence[GaussianRational]) -> bool:
        return self.contains_int(to_intvec(v))


def rank(rows: Iterable[Sequence[GaussianRational]], n: int) -> int:
    ech = Echelon(n)
    for r in rows:
        ech.add(r)
    return ech.rank


def rref(rows: Iterable[Sequence[GaussianRational]], n: int) -> tuple[list[list[GaussianRational]], list[int]]:
    """Reduced row echelon form with unit pivots."""
    ech = Echelon(n)
    for r in rows:
        ech.add(r)
    mat = [from_intvec(row) for row in ech.rows()]
    pivots = ech.pivots()
    for i, p in enumerate(pivots):
        inv = 1 / mat[i][p]
        mat[i] = [x * inv for x in mat[i]]
    for i in reversed(range(len(pivots))):
        p = pivots[i]
        for k in range(i):
            c = mat[k][p]
            if c:
                mat[k] = [a - c * b for a, b in zip(mat[k], mat[i])]
    return mat, pivots


def nullspace(rows: Iterable[Sequence[GaussianRational]], n: int) -> list[list[GaussianRational]]:
    """Basis of {x : row . x = 0 for every row} (plain bilinear pairing)."""
    mat, pivots = rref(rows, n)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = []
    for f in free:
        x = [ZERO] * n
        x[f] = GaussianRational(1)
        for i, p in enumerate(pivots):
            x[p] = -mat[i][f]
        basis.append(x)
    return basis
