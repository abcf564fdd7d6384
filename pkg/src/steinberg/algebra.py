"""The Steinberg algebra of a finite groupoid over Q(i).

For a finite discrete groupoid every function is a finite combination of
indicators of bisections, so elements are dense coefficient vectors indexed
by morphisms.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .errors import ComplexityRefusal, GroupoidMismatch, SupportViolation
from .gaussian import ONE, ZERO, GaussianRational, gr
from .groupoid import UNDEFINED, FiniteGroupoid, is_bisection, isotropy, require_bisection
from .linalg import Echelon, IntVec, from_intvec, is_zero, nullspace, to_intvec
from .report import SimplicityReport

SUBSET_SEARCH_LIMIT = 16


class AlgebraElement:
    __slots__ = ("groupoid", "coeffs")

    def __init__(self, groupoid: FiniteGroupoid, coeffs: Iterable):
        coeffs = tuple(gr(c) for c in coeffs)
        if len(coeffs) != groupoid.n:
            raise ValueError(f"expected {groupoid.n} coefficients, got {len(coeffs)}")
        self.groupoid = groupoid
        self.coeffs = coeffs

    @classmethod
    def _wrap(cls, groupoid, coeffs):
        x = object.__new__(cls)
        x.groupoid = groupoid
        x.coeffs = tuple(coeffs)
        return x

    @classmethod
    def zero(cls, G: FiniteGroupoid) -> "AlgebraElement":
        return cls._wrap(G, (ZERO,) * G.n)

    @classmethod
    def delta(cls, G: FiniteGroupoid, g: int, c=1) -> "AlgebraElement":
        coeffs = [ZERO] * G.n
        coeffs[g] = gr(c)
        return cls._wrap(G, coeffs)

    @classmethod
    def from_mapping(cls, G: FiniteGroupoid, values: Mapping) -> "AlgebraElement":
        """Keys are morphism indices or labels."""
        coeffs = [ZERO] * G.n
        for k, v in values.items():
            g = k if isinstance(k, int) else G.index(k)
            coeffs[g] = coeffs[g] + gr(v)
        return cls._wrap(G, coeffs)

    def __getitem__(self, g: int) -> GaussianRational:
        return self.coeffs[g]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(g for g, c in enumerate(self.coeffs) if c)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _same(self, other):
        if not isinstance(other, AlgebraElement):
            return False
        if other.groupoid is not self.groupoid and other.groupoid != self.groupoid:
            raise GroupoidMismatch("elements live over different groupoids")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        return AlgebraElement._wrap(self.groupoid, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return AlgebraElement._wrap(self.groupoid, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return AlgebraElement._wrap(self.groupoid, [-a for a in self.coeffs])

    def scale(self, c) -> "AlgebraElement":
        c = gr(c)
        return AlgebraElement._wrap(self.groupoid, [c * a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return convolve(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def star(self) -> "AlgebraElement":
        return involute(self)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.groupoid == other.groupoid and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"{c}*d[{self.groupoid.labels[g]}]" for g, c in enumerate(self.coeffs) if c]
        return "AlgebraElement(" + (" + ".join(terms) or "0") + ")"

    def to_intvec(self) -> IntVec:
        return to_intvec(self.coeffs)


def indicator(G: FiniteGroupoid, B: Iterable[int]) -> AlgebraElement:
    B = require_bisection(G, B)
    return AlgebraElement._wrap(G, [ONE if g in B else ZERO for g in range(G.n)])


def unit_indicator(G: FiniteGroupoid, V: Iterable[int]) -> AlgebraElement:
    V = set(V)
    if not V <= set(G.units):
        raise ValueError("V must consist of units")
    return indicator(G, V)


def identity(G: FiniteGroupoid) -> AlgebraElement:
    return indicator(G, G.units)


def convolve(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    """(f*g)(x) = sum over ab = x of f(a) g(b)."""
    if f.groupoid is not g.groupoid and f.groupoid != g.groupoid:
        raise GroupoidMismatch("elements live over different groupoids")
    G = f.groupoid
    fc, gc = f.coeffs, g.coeffs
    out = [ZERO] * G.n
    for a, b, ab in G.composable:
        x, y = fc[a], gc[b]
        if x and y:
            out[ab] = out[ab] + x * y
    return AlgebraElement._wrap(G, out)


def involute(f: AlgebraElement) -> AlgebraElement:
    """f*(x) = conj(f(x^-1))."""
    G = f.groupoid
    return AlgebraElement._wrap(G, [f.coeffs[G.inverse[g]].conjugate() for g in range(G.n)])


def restrict_to_units(c: AlgebraElement) -> AlgebraElement:
    G = c.groupoid
    return AlgebraElement._wrap(G, [c.coeffs[g] if G.is_unit(g) else ZERO for g in range(G.n)])


# -- ideals --------------------------------------------------------------------


def _left_tables(G: FiniteGroupoid):
    """For each a, pairs (x, a^-1 x): (delta_a * f)(x) = f(a^-1 x)."""
    out = []
    for a in range(G.n):
        ai = G.inverse[a]
        out.append(tuple((x, G.table[ai][x]) for x in range(G.n) if G.table[ai][x] != UNDEFINED))
    return out


def _right_tables(G: FiniteGroupoid):
    """For each a, pairs (x, x a^-1): (f * delta_a)(x) = f(x a^-1)."""
    out = []
    for a in range(G.n):
        ai = G.inverse[a]
        out.append(tuple((x, G.table[x][ai]) for x in range(G.n) if G.table[x][ai] != UNDEFINED))
    return out


def _shift(iv: IntVec, pairs, n: int) -> IntVec:
    re, im = iv
    nre = [0] * n
    nim = [0] * n
    for x, y in pairs:
        nre[x] = re[y]
        nim[x] = im[y]
    return nre, nim


@dataclass
class IdealBasis:
    groupoid: FiniteGroupoid
    basis: list[AlgebraElement]
    _echelon: Echelon = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def is_whole(self) -> bool:
        return self.dimension == self.groupoid.n

    def __contains__(self, f: AlgebraElement) -> bool:
        return self._echelon.contains(f.coeffs)


def ideal_generated_by(S: Iterable[AlgebraElement], G: FiniteGroupoid | None = None) -> IdealBasis:
    """Two-sided ideal generated by S: close span(S) under multiplication by
    every delta on both sides, to a fixed point."""
    S = list(S)
    if G is None:
        if not S:
            raise ValueError("need a groupoid when S is empty")
        G = S[0].groupoid
    for s in S:
        if s.groupoid != G:
            raise GroupoidMismatch("generators live over different groupoids")
    n = G.n
    left, right = _left_tables(G), _right_tables(G)
    ech = Echelon(n)
    queue: deque[IntVec] = deque()
    for s in S:
        iv = s.to_intvec()
        if ech.add_int(iv):
            queue.append(iv)
    while queue and ech.rank < n:
        iv = queue.popleft()
        for a in range(n):
            for table in (left, right):
                w = _shift(iv, table[a], n)
                if not is_zero(w) and ech.add_int(w):
                    queue.append(w)
                    if ech.rank == n:
                        break
    basis = [AlgebraElement._wrap(G, from_intvec(row)) for row in ech.rows()]
    return IdealBasis(G, basis, ech)


def contains_unit_indicator(I: IdealBasis) -> frozenset[int] | None:
    """Smallest nonempty V of units with 1_V in I, or None."""
    G = I.groupoid
    units = list(G.units)
    if len(units) > SUBSET_SEARCH_LIMIT:
        raise ComplexityRefusal(f"{len(units)} units exceeds {SUBSET_SEARCH_LIMIT}")
    for size in range(1, len(units) + 1):
        for V in itertools.combinations(units, size):
            re = [0] * G.n
            for u in V:
                re[u] = 1
            if I._echelon.contains_int((re, [0] * G.n)):
                return frozenset(V)
    return None


# -- norms and closed forms ------------------------------------------------------


class INorm(NamedTuple):
    value: float
    unit: int
    side: str  # "source" (sum over G_u) or "range" (sum over G^u)


def _abs_decimal(z: GaussianRational) -> Decimal:
    a, b = z.numerator
    return (Decimal(a * a + b * b).sqrt()) / Decimal(z.denominator)


def i_norm(f: AlgebraElement) -> INorm:
    """sup over units of max(sum_{G_u} |f|, sum_{G^u} |f|).

    Sums of square roots are evaluated with 60 significant digits, so the
    returned float is correctly rounded and the maximising unit is exact
    unless two candidates agree to ~50 digits (then the first wins).
    """
    G = f.groupoid
    best = None
    with localcontext() as ctx:
        ctx.prec = 60
        mods = [_abs_decimal(c) if c else Decimal(0) for c in f.coeffs]
        for u in G.units:
            for side, fibre in (("source", G.from_source(u)), ("range", G.to_range(u))):
                s = sum((mods[g] for g in fibre), Decimal(0))
                if best is None or s > best[0] + Decimal("1e-50"):
                    best = (s, u, side)
    if best is None:
        return INorm(0.0, -1, "source")
    return INorm(float(best[0]), best[1], best[2])


def sandwich(h: AlgebraElement, f: AlgebraElement) -> AlgebraElement:
    """h * f * h^*, in closed form: |h(x)|^2 f(s(x)) placed at r(x)."""
    G = h.groupoid
    if f.groupoid != G:
        raise GroupoidMismatch("elements live over different groupoids")
    if not is_bisection(G, h.support):
        raise SupportViolation("support of h is not contained in a bisection")
    if not f.support <= set(G.units):
        raise SupportViolation("f must be supported on units")
    out = [ZERO] * G.n
    for x in h.support:
        out[G.range[x]] = GaussianRational(h.coeffs[x].abs2()) * f.coeffs[G.source[x]]
    return AlgebraElement._wrap(G, out)


def kernel_element_for_isotropy(G: FiniteGroupoid, B: Iterable[int], f: AlgebraElement) -> AlgebraElement:
    """f - f0 where f0(u) = f(x_u), x_u the arrow of B with source u."""
    B = frozenset(B)
    if not is_bisection(G, B):
        raise SupportViolation("B is not a bisection")
    if not B <= isotropy(G) - set(G.units):
        raise SupportViolation("B must consist of nonunit isotropy")
    if not f.support <= B:
        raise SupportViolation("f must be supported on B")
    f0 = [ZERO] * G.n
    for x in B:
        f0[G.source[x]] = f.coeffs[x]
    return f - AlgebraElement._wrap(G, f0)


# -- simplicity ---------------------------------------------------------------------


def _left_trace(G: FiniteGroupoid, g: int) -> int:
    """Trace of left multiplication by delta_g: #{x : g x = x}."""
    return sum(1 for x in range(G.n) if G.table[g][x] == x)


def center_basis(G: FiniteGroupoid) -> list[AlgebraElement]:
    n = G.n
    rows = []
    for a in range(n):
        # (x * d_a - d_a * x)(y) = sum_z x_z ([z a = y] - [a z = y])
        eqs = [[0] * n for _ in range(n)]
        for z in range(n):
            za = G.table[z][a]
            if za != UNDEFINED:
                eqs[za][z] += 1
            az = G.table[a][z]
            if az != UNDEFINED:
                eqs[az][z] -= 1
        rows.extend([gr(v) for v in row] for row in eqs if any(row))
    return [AlgebraElement._wrap(G, v) for v in nullspace(rows, n)]


def radical_basis(G: FiniteGroupoid) -> list[AlgebraElement]:
    """Radical as the null space of the trace form tr(L_a L_b) (char 0)."""
    n = G.n
    trace = [_left_trace(G, g) for g in range(n)]
    gram = []
    for a in range(n):
        gram.append([gr(trace[G.table[a][b]]) if G.table[a][b] != UNDEFINED else ZERO for b in range(n)])
    return [AlgebraElement._wrap(G, v) for v in nullspace(gram, n)]


def random_element(G: FiniteGroupoid, rng: random.Random, support=None, density: float = 0.7, bound: int = 3, nonzero: bool = True) -> AlgebraElement:
    """Random Gaussian-rational element with small numerators and denominators."""
    support = list(range(G.n)) if support is None else sorted(support)
    while True:
        coeffs = [ZERO] * G.n
        for g in support:
            if rng.random() < density:
                re = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
                im = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
                coeffs[g] = GaussianRational(re, im)
        x = AlgebraElement._wrap(G, coeffs)
        if not nonzero or not x.is_zero() or not support:
            return x


def is_simple_algebra(G: FiniteGroupoid, probes: int = 3, seed: int = 0) -> SimplicityReport:
    """Simple iff the trace-form radical is zero and the center is 1-dimensional.

    Randomised ideal probes are recorded in the evidence but never decide
    the verdict.
    """
    center = center_basis(G)
    radical = radical_basis(G)
    simple = not radical and len(center) == 1
    reasons = [f"center dimension {len(center)}", f"radical dimension {len(radical)}"]
    witnesses: dict = {"center": center}
    if radical:
        witnesses["radical"] = radical[0]
    rng = random.Random(seed)
    probe_dims = []
    for _ in range(probes):
        b = random_element(G, rng)
        probe_dims.append(ideal_generated_by([b]).dimension)
    witnesses["probe_dimensions"] = probe_dims
    return SimplicityReport(simple, reasons, witnesses)

