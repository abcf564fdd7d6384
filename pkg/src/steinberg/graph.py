"""Boundary-path groupoids of finite directed graphs without sinks.

Conventions, fixed once: a path is a tuple of edge names e1...ek with
dst(e_i) == src(e_{i+1}); infinite paths extend forward; the shift drops
the first edge.  The groupoid consists of triples (x, k, y) of infinite
paths with shift^m(x) == shift^n(y), k = m - n.  A term Z(mu, nu) with
dst(mu) == dst(nu) == v is the compact open bisection
{(mu w, |mu| - |nu|, nu w) : w an infinite path from v}.

An empty path is meaningful only together with a vertex, so every term
carries the common end vertex explicitly.
"""

from __future__ import annotations

import random
from collections import defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .check import Verdict
from .errors import BadPair, ComplexityRefusal, DepthTooSmall, GraphMismatch, SourceVertex
from .gaussian import ZERO, GaussianRational, gr
from .report import SimplicityReport

MAX_TERMS = 10_000
MAX_DEPTH = 12

Path = tuple[str, ...]


@dataclass(frozen=True)
class DirectedGraph:
    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    src: tuple[str, ...]
    dst: tuple[str, ...]
    name: str = field(default="", compare=False)

    @cached_property
    def _edge_index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def source_of(self, e: str) -> str:
        return self.src[self._edge_index[e]]

    def target_of(self, e: str) -> str:
        return self.dst[self._edge_index[e]]

    @cached_property
    def out_edges(self) -> dict[str, tuple[str, ...]]:
        out = {v: [] for v in self.vertices}
        for e, s in zip(self.edges, self.src):
            out[s].append(e)
        return {v: tuple(es) for v, es in out.items()}

    def is_path(self, path: Sequence[str]) -> bool:
        if any(e not in self._edge_index for e in path):
            return False
        return all(self.target_of(a) == self.source_of(b) for a, b in zip(path, path[1:]))

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<DirectedGraph{tag}: {len(self.vertices)} vertices, {len(self.edges)} edges>"


def validate_graph(raw: Mapping) -> DirectedGraph:
    """Build from ``{"vertices": [...], "edges": [{"name", "src", "dst"}]}``."""
    vertices = [str(v) for v in raw["vertices"]]
    if len(set(vertices)) != len(vertices):
        raise ValueError("duplicate vertices")
    edges = []
    for e in raw["edges"]:
        if isinstance(e, Mapping):
            edges.append((str(e["name"]), str(e["src"]), str(e["dst"])))
        else:
            name, s, d = e
            edges.append((str(name), str(s), str(d)))
    return make_graph(vertices, edges, name=str(raw.get("name", "")))


def make_graph(vertices: Iterable, edges: Iterable[tuple], name: str = "") -> DirectedGraph:
    vertices = tuple(str(v) for v in vertices)
    vset = set(vertices)
    edges = [tuple(map(str, e)) for e in edges]
    names = [e[0] for e in edges]
    if len(set(names)) != len(names):
        raise ValueError("duplicate edge names")
    for n, s, d in edges:
        if s not in vset or d not in vset:
            raise ValueError(f"edge {n!r} mentions an unknown vertex")
    emitting = {s for _, s, _ in edges}
    for v in vertices:
        if v not in emitting:
            raise SourceVertex(v)
    return DirectedGraph(
        vertices, tuple(names), tuple(e[1] for e in edges), tuple(e[2] for e in edges), name
    )


def graph_to_dict(E: DirectedGraph) -> dict:
    out = {
        "vertices": list(E.vertices),
        "edges": [{"name": n, "src": s, "dst": d} for n, s, d in zip(E.edges, E.src, E.dst)],
    }
    if E.name:
        out["name"] = E.name
    return out


def disjoint_union_graph(E: DirectedGraph, F: DirectedGraph, name: str = "") -> DirectedGraph:
    vs = [f"1:{v}" for v in E.vertices] + [f"2:{v}" for v in F.vertices]
    es = [(f"1:{n}", f"1:{s}", f"1:{d}") for n, s, d in zip(E.edges, E.src, E.dst)]
    es += [(f"2:{n}", f"2:{s}", f"2:{d}") for n, s, d in zip(F.edges, F.src, F.dst)]
    return make_graph(vs, es, name or f"{E.name or 'E'} + {F.name or 'F'}")


def paths_of_length(E: DirectedGraph, k: int, start: str | None = None) -> Iterator[tuple[Path, str, str]]:
    """Yield (path, start vertex, end vertex) for every path with k edges."""
    starts = E.vertices if start is None else (start,)
    for v in starts:
        stack = [((), v)]
        while stack:
            p, w = stack.pop()
            if len(p) == k:
                yield p, v, w
                continue
            for e in reversed(E.out_edges[w]):
                stack.append((p + (e,), E.target_of(e)))


# -- terms and elements -------------------------------------------------------------


@dataclass(frozen=True, order=True)
class PathPairTerm:
    mu: Path
    nu: Path
    vertex: str

    @property
    def degree(self) -> int:
        return len(self.mu) - len(self.nu)

    def sort_key(self):
        return (self.degree, self.nu, self.mu, self.vertex)

    def __str__(self):
        mu = "".join(self.mu) if self.mu else self.vertex
        nu = "".join(self.nu) if self.nu else self.vertex
        return f"Z({mu},{nu})"


def term(E: DirectedGraph, mu: Sequence[str], nu: Sequence[str], vertex: str | None = None) -> PathPairTerm:
    mu, nu = tuple(mu), tuple(nu)
    for p in (mu, nu):
        if not E.is_path(p):
            raise ValueError(f"{p!r} is not a path")
    ends = {E.target_of(p[-1]) for p in (mu, nu) if p}
    if vertex is not None:
        ends.add(str(vertex))
    if len(ends) != 1:
        raise ValueError(f"Z({mu}, {nu}) needs dst(mu) == dst(nu) (and a vertex when both are empty)")
    v = ends.pop()
    if v not in E.out_edges:
        raise ValueError(f"unknown vertex {v!r}")
    return PathPairTerm(mu, nu, v)


def _start(E: DirectedGraph, path: Path, vertex: str) -> str:
    return E.source_of(path[0]) if path else vertex


def ck_expand(E: DirectedGraph, t: PathPairTerm) -> list[PathPairTerm]:
    """Z(mu, nu) as the disjoint union of Z(mu e, nu e) over edges e leaving dst."""
    return [PathPairTerm(t.mu + (e,), t.nu + (e,), E.target_of(e)) for e in E.out_edges[t.vertex]]


class GraphAlgebraElement:
    """Finite formal sum of coefficients times Z(mu, nu)."""

    __slots__ = ("graph", "terms")

    def __init__(self, graph: DirectedGraph, terms: Iterable[tuple]):
        self.graph = graph
        self.terms = tuple((gr(c), t) for c, t in terms)

    @classmethod
    def single(cls, E: DirectedGraph, mu, nu, vertex=None, coeff=1) -> "GraphAlgebraElement":
        return cls(E, [(coeff, term(E, mu, nu, vertex))])

    @classmethod
    def zero(cls, E: DirectedGraph) -> "GraphAlgebraElement":
        return cls(E, [])

    def _check(self, other):
        if not isinstance(other, GraphAlgebraElement):
            return False
        if other.graph != self.graph:
            raise GraphMismatch("elements live over different graphs")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return add_g(self, other)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return add_g(self, scale_g(-1, other))

    def __neg__(self):
        return scale_g(-1, self)

    def __mul__(self, other):
        if isinstance(other, GraphAlgebraElement):
            return multiply(self, other)
        return scale_g(other, self)

    def __rmul__(self, other):
        return scale_g(other, self)

    def star(self):
        return involute_g(self)

    def is_zero(self) -> bool:
        return not normalize(self).terms

    def __eq__(self, other):
        if not isinstance(other, GraphAlgebraElement):
            return NotImplemented
        if other.graph != self.graph:
            return False
        return normalize(self).terms == normalize(other).terms

    def __hash__(self):
        return hash(normalize(self).terms)

    def __repr__(self):
        body = " + ".join(f"({c})*{t}" for c, t in self.terms) or "0"
        return f"GraphAlgebraElement({body})"


def _expand_to(E: DirectedGraph, items: dict, length: int) -> dict:
    """Expand every term until |nu| == length, accumulating coefficients."""
    out: dict = defaultdict(lambda: ZERO)
    stack = list(items.items())
    while stack:
        t, c = stack.pop()
        if len(t.nu) >= length:
            out[t] = out[t] + c
        else:
            if len(out) + len(stack) > MAX_TERMS:
                raise ComplexityRefusal(f"expansion exceeds {MAX_TERMS} terms")
            stack.extend((s, c) for s in ck_expand(E, t))
    return {t: c for t, c in out.items() if c}


def _contract_once(E: DirectedGraph, items: dict) -> dict | None:
    """Undo one level of expansion on a whole degree class, if possible."""
    groups: dict = defaultdict(dict)
    for t, c in items.items():
        if not t.mu or not t.nu or t.mu[-1] != t.nu[-1]:
            return None
        e = t.mu[-1]
        v = E.source_of(e)
        groups[PathPairTerm(t.mu[:-1], t.nu[:-1], v)][e] = c
    out = {}
    for parent, children in groups.items():
        needed = E.out_edges[parent.vertex]
        if set(children) != set(needed):
            return None
        coeffs = set(children.values())
        if len(coeffs) != 1:
            return None
        out[parent] = coeffs.pop()
    return out


def normalize(x: GraphAlgebraElement) -> GraphAlgebraElement:
    """Canonical form: per degree, all terms at the least common |nu| that
    represents the function, like terms collected, zeros dropped."""
    E = x.graph
    by_degree: dict[int, dict] = defaultdict(lambda: defaultdict(lambda: ZERO))
    for c, t in x.terms:
        if len(t.mu) > MAX_DEPTH or len(t.nu) > MAX_DEPTH:
            raise ComplexityRefusal(f"term {t} deeper than {MAX_DEPTH}")
        by_degree[t.degree][t] = by_degree[t.degree][t] + c
    out = []
    for d in sorted(by_degree):
        items = {t: c for t, c in by_degree[d].items() if c}
        if not items:
            continue
        length = max(len(t.nu) for t in items)
        items = _expand_to(E, items, length)
        while items:
            smaller = _contract_once(E, items)
            if smaller is None:
                break
            items = smaller
        out.extend((c, t) for t, c in items.items())
    out.sort(key=lambda ct: ct[1].sort_key())
    y = GraphAlgebraElement.__new__(GraphAlgebraElement)
    y.graph = E
    y.terms = tuple(out)
    return y


def _product_term(E: DirectedGraph, s: PathPairTerm, t: PathPairTerm) -> PathPairTerm | None:
    """Z(mu, nu) Z(alpha, beta)."""
    mu, nu, alpha, beta = s.mu, s.nu, t.mu, t.nu
    if _start(E, nu, s.vertex) != _start(E, alpha, t.vertex):
        return None
    if alpha[: len(nu)] == nu and len(alpha) >= len(nu):
        rest = alpha[len(nu):]
        return PathPairTerm(mu + rest, beta, t.vertex)
    if nu[: len(alpha)] == alpha:
        rest = nu[len(alpha):]
        return PathPairTerm(mu, beta + rest, s.vertex)
    return None


def multiply(x: GraphAlgebraElement, y: GraphAlgebraElement) -> GraphAlgebraElement:
    if x.graph != y.graph:
        raise GraphMismatch("elements live over different graphs")
    E = x.graph
    out = []
    for c, s in x.terms:
        for d, t in y.terms:
            p = _product_term(E, s, t)
            if p is not None:
                out.append((c * d, p))
    return normalize(GraphAlgebraElement(E, out))


def involute_g(x: GraphAlgebraElement) -> GraphAlgebraElement:
    return normalize(GraphAlgebraElement(x.graph, [(c.conjugate(), PathPairTerm(t.nu, t.mu, t.vertex)) for c, t in x.terms]))


def add_g(x: GraphAlgebraElement, y: GraphAlgebraElement) -> GraphAlgebraElement:
    if x.graph != y.graph:
        raise GraphMismatch("elements live over different graphs")
    return normalize(GraphAlgebraElement(x.graph, x.terms + y.terms))


def scale_g(c, x: GraphAlgebraElement) -> GraphAlgebraElement:
    c = gr(c)
    return normalize(GraphAlgebraElement(x.graph, [(c * a, t) for a, t in x.terms]))


def required_depth(x: GraphAlgebraElement) -> int:
    terms = normalize(x).terms
    return max((max(len(t.mu), len(t.nu)) for _, t in terms), default=0)


def evaluate_at_depth(x: GraphAlgebraElement, depth: int) -> dict[PathPairTerm, GaussianRational]:
    """Nonzero values on depth-``depth`` atoms Z(p, q) with |q| == depth."""
    need = required_depth(x)
    if depth < need:
        raise DepthTooSmall(f"depth {depth} < required {need}")
    if depth > MAX_DEPTH:
        raise ComplexityRefusal(f"depth {depth} exceeds {MAX_DEPTH}")
    return _atom_values(normalize(x), depth)


def _atom_values(x: GraphAlgebraElement, depth: int) -> dict[PathPairTerm, GaussianRational]:
    """Expand every term to |nu| == depth; needs depth >= each |nu|."""
    E = x.graph
    acc: dict = defaultdict(lambda: ZERO)
    for c, t in x.terms:
        for a, v in _expand_to(E, {t: c}, depth).items():
            acc[a] = acc[a] + v
    return {a: v for a, v in acc.items() if v}


# -- concrete points: eventually periodic infinite paths ------------------------------


@dataclass(frozen=True)
class InfinitePath:
    """prefix followed by cycle repeated forever, in canonical (shortest) form."""

    prefix: Path
    cycle: Path

    @staticmethod
    def make(prefix: Sequence[str], cycle: Sequence[str]) -> "InfinitePath":
        prefix, cycle = tuple(prefix), tuple(cycle)
        if not cycle:
            raise ValueError("cycle must be nonempty")
        k = len(cycle)
        for p in range(1, k + 1):
            if k % p == 0 and cycle == cycle[:p] * (k // p):
                cycle = cycle[:p]
                break
        while prefix and prefix[-1] == cycle[-1]:
            prefix = prefix[:-1]
            cycle = (cycle[-1],) + cycle[:-1]
        return InfinitePath(prefix, cycle)

    def edge(self, i: int) -> str:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def head(self, k: int) -> Path:
        return tuple(self.edge(i) for i in range(k))

    def shift(self, k: int) -> "InfinitePath":
        if k <= len(self.prefix):
            return InfinitePath.make(self.prefix[k:], self.cycle)
        r = (k - len(self.prefix)) % len(self.cycle)
        return InfinitePath.make((), self.cycle[r:] + self.cycle[:r])

    def prepend(self, path: Sequence[str]) -> "InfinitePath":
        return InfinitePath.make(tuple(path) + self.prefix, self.cycle)

    def start(self, E: DirectedGraph) -> str:
        return E.source_of(self.edge(0))


def greedy_path(E: DirectedGraph, v: str) -> InfinitePath:
    """Follow the first out-edge from v until a vertex repeats."""
    seen = {}
    edges = []
    w = v
    while w not in seen:
        seen[w] = len(edges)
        e = E.out_edges[w][0]
        edges.append(e)
        w = E.target_of(e)
    k = seen[w]
    return InfinitePath.make(edges[:k], edges[k:])


Point = tuple[InfinitePath, int, InfinitePath]


def _in_cylinder(E: DirectedGraph, x: InfinitePath, path: Path, vertex: str) -> bool:
    if path:
        return x.head(len(path)) == path
    return x.start(E) == vertex


def in_bisection(E: DirectedGraph, t: PathPairTerm, point: Point) -> bool:
    x, k, y = point
    if k != t.degree:
        return False
    if not _in_cylinder(E, x, t.mu, t.vertex) or not _in_cylinder(E, y, t.nu, t.vertex):
        return False
    return x.shift(len(t.mu)) == y.shift(len(t.nu))


def value_at(x: GraphAlgebraElement, point: Point) -> GaussianRational:
    """Pointwise value of the function sum c_i 1_{Z_i}."""
    total = ZERO
    for c, t in x.terms:
        if in_bisection(x.graph, t, point):
            total = total + c
    return total


def convolution_at(f: GraphAlgebraElement, g: GraphAlgebraElement, point: Point) -> GaussianRational:
    """(f*g)(point) = sum over a with r(a) = r(point) of f(a) g(a^-1 point).

    Each term Z(mu, nu) of f contributes at most one a: the arrow
    (x, |mu|-|nu|, nu shift^|mu| x), present exactly when x begins with mu.
    """
    E = f.graph
    x, k, y = point
    total = ZERO
    for c, t in f.terms:
        if not _in_cylinder(E, x, t.mu, t.vertex):
            continue
        z = x.shift(len(t.mu)).prepend(t.nu)
        total = total + c * value_at(g, (z, k - t.degree, y))
    return total


def atom_point(E: DirectedGraph, atom: PathPairTerm) -> Point:
    w = greedy_path(E, atom.vertex)
    return (w.prepend(atom.mu), atom.degree, w.prepend(atom.nu))


def _paths_in_cylinders(E: DirectedGraph, k: int, cylinders) -> dict[str, set[tuple[Path, str]]]:
    """Paths of length k meeting one of the cylinders, keyed by end vertex."""
    out: dict[str, set] = defaultdict(set)
    if cylinders is None:
        for p, s, t in paths_of_length(E, k):
            out[t].add((p, s))
        return out
    for path, start in cylinders:
        if len(path) >= k:
            p = path[:k]
            end = E.target_of(p[-1]) if p else start
            out[end].add((p, start))
        else:
            end = E.target_of(path[-1]) if path else start
            for ext, _, t in paths_of_length(E, k - len(path), end):
                out[t].add((path + ext, start))
    return out


def atoms(
    E: DirectedGraph,
    depth: int,
    degrees: Iterable[int],
    range_prefixes: Iterable[tuple[Path, str]] | None = None,
    source_prefixes: Iterable[tuple[Path, str]] | None = None,
) -> Iterator[PathPairTerm]:
    """Depth-``depth`` atoms of the given degrees.

    Optional filters keep only atoms whose range (resp. source) cylinder
    meets one of the given cylinders, each given as (path, start vertex).
    """
    rf = None if range_prefixes is None else list(range_prefixes)
    sf = None if source_prefixes is None else list(source_prefixes)
    qs = _paths_in_cylinders(E, depth, sf)
    for d in sorted(set(degrees)):
        if depth + d < 0:
            continue
        ps = _paths_in_cylinders(E, depth + d, rf)
        for v in E.vertices:
            for q, _ in sorted(qs.get(v, ())):
                for p, _ in sorted(ps.get(v, ())):
                    yield PathPairTerm(p, q, v)


# -- decision procedures ----------------------------------------------------------------


def exitless_cycles(E: DirectedGraph) -> list[Path]:
    """Cycles all of whose vertices emit exactly one edge."""
    found = {}
    for v in E.vertices:
        if len(E.out_edges[v]) != 1:
            continue
        path = []
        w = v
        seen = set()
        while len(E.out_edges[w]) == 1 and w not in seen:
            seen.add(w)
            e = E.out_edges[w][0]
            path.append(e)
            w = E.target_of(e)
            if w == v:
                key = frozenset(E.source_of(e) for e in path)
                if key not in found:
                    # rotate to start at the least vertex
                    starts = [E.source_of(e) for e in path]
                    i = starts.index(min(starts))
                    found[key] = tuple(path[i:] + path[:i])
                break
    return sorted(found.values())


def condition_L(E: DirectedGraph) -> Verdict:
    """Every cycle has an exit; witness is an exitless cycle otherwise."""
    cyc = exitless_cycles(E)
    return Verdict(True) if not cyc else Verdict(False, cyc[0])


def _reach(E: DirectedGraph, v: str) -> set[str]:
    seen = {v}
    todo = deque([v])
    while todo:
        w = todo.popleft()
        for e in E.out_edges[w]:
            t = E.target_of(e)
            if t not in seen:
                seen.add(t)
                todo.append(t)
    return seen


def cycle_vertices(E: DirectedGraph) -> set[str]:
    out = set()
    for v in E.vertices:
        if any(v in _reach(E, E.target_of(e)) for e in E.out_edges[v]):
            out.add(v)
    return out


def is_cofinal(E: DirectedGraph) -> Verdict:
    """Every vertex reaches every vertex lying on a cycle.

    Every infinite path eventually stays inside a strongly connected
    component containing a cycle, so this is "every vertex reaches every
    infinite path", i.e. every orbit is dense.  Witness: (v, w) with w on a
    cycle and unreachable from v.
    """
    cyc = cycle_vertices(E)
    for v in E.vertices:
        r = _reach(E, v)
        for w in sorted(cyc - r):
            return Verdict(False, (v, w))
    return Verdict(True)


def cofinal_oracle(E: DirectedGraph, depth: int | None = None) -> bool:
    """Orbit density by enumeration: every vertex reaches a vertex of every
    path of length ``depth`` (exact once depth >= number of vertices)."""
    depth = max(len(E.vertices), 4) if depth is None else depth
    n = len(E.vertices)
    reach = {}
    for v in E.vertices:
        layer = {v}
        seen = {v}
        for _ in range(n):
            layer = {E.target_of(e) for w in layer for e in E.out_edges[w]}
            seen |= layer
        reach[v] = seen
    for p, s, _ in paths_of_length(E, depth):
        visited = {s} | {E.target_of(e) for e in p}
        for v in E.vertices:
            if not reach[v] & visited:
                return False
    return True


def is_topologically_free(E: DirectedGraph, m: int, n: int) -> bool:
    """No cylinder lies inside {x : shift^m x == shift^n x}.

    Such a set is finite (a point there is determined by its first max(m, n)
    edges), so a cylinder inside it is a single point: a vertex whose only
    infinite path runs around an exitless cycle.  That point is fixed iff the
    cycle length divides |m - n|.
    """
    if m == n:
        raise BadPair("need m != n")
    diff = abs(m - n)
    return not any(diff % len(c) == 0 for c in exitless_cycles(E))


def topologically_free_oracle(E: DirectedGraph, m: int, n: int, depth: int | None = None) -> bool:
    """Depth-bounded cylinder enumeration.

    For every cylinder Z(mu), |mu| <= number of vertices, search the
    extensions of mu up to ``|mu| + depth`` edges for a violation of
    x_{i+m} == x_{i+n}; a cylinder with no violation is taken to lie in the
    fixed set.
    """
    if m == n:
        raise BadPair("need m != n")
    nv = len(E.vertices)
    depth = max(m, n) + nv * abs(m - n) if depth is None else depth
    hi, lo = max(m, n), min(m, n)

    def contained(mu: Path, v_end: str) -> bool:
        limit = len(mu) + depth
        # DFS; return False on the first violating extension
        stack = [(mu, v_end)]
        while stack:
            p, w = stack.pop()
            j = len(p) - 1
            if j >= hi and p[j] != p[j - hi + lo]:
                return False
            if len(p) >= limit:
                continue
            for e in E.out_edges[w]:
                stack.append((p + (e,), E.target_of(e)))
        return True

    for k in range(nv + 1):
        for mu, s, t in paths_of_length(E, k):
            # the prefix itself must already satisfy the constraint
            if any(mu[i + hi] != mu[i + lo] for i in range(len(mu) - hi)):
                continue
            if contained(mu, t):
                return False
    return True


def graph_simplicity_verdict(E: DirectedGraph) -> SimplicityReport:
    L = condition_L(E)
    cof = is_cofinal(E)
    reasons = []
    witnesses = {}
    if L:
        reasons.append("every cycle has an exit (effective)")
    else:
        reasons.append(f"exitless cycle {''.join(L.witness)} (not effective)")
        witnesses["exitless_cycle"] = L.witness
    if cof:
        reasons.append("cofinal (minimal)")
    else:
        v, w = cof.witness
        reasons.append(f"vertex {v} cannot reach cycle vertex {w} (not minimal)")
        witnesses["not_cofinal"] = cof.witness
        witnesses["invariant_vertices"] = sorted(set(E.vertices) - _reach(E, v))
    return SimplicityReport(bool(L) and bool(cof), reasons, witnesses)


def random_graph_element(E: DirectedGraph, rng: random.Random, max_terms: int = 3, max_len: int = 2) -> GraphAlgebraElement:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        v = rng.choice(E.vertices)
        mu = _random_path_into(E, v, rng.randint(0, max_len), rng)
        nu = _random_path_into(E, v, rng.randint(0, max_len), rng)
        c = GaussianRational(Fraction(rng.randint(-3, 3), rng.randint(1, 2)), rng.randint(-2, 2))
        terms.append((c, PathPairTerm(mu, nu, v)))
    return GraphAlgebraElement(E, terms)


def _random_path_into(E: DirectedGraph, v: str, k: int, rng: random.Random) -> Path:
    incoming = defaultdict(list)
    for e, t in zip(E.edges, E.dst):
        incoming[t].append(e)
    path = []
    w = v
    for _ in range(k):
        if not incoming[w]:
            break
        e = rng.choice(incoming[w])
        path.append(e)
        w = E.source_of(e)
    return tuple(reversed(path))


def multiply_mismatches(f: GraphAlgebraElement, g: GraphAlgebraElement, depth: int | None = None) -> list:
    """Atoms where multiply(f, g) disagrees with pointwise convolution.

    Supports of different degrees are disjoint, so each degree class is
    compared separately.  Without an explicit depth a class uses the least
    depth at which both the computed product and every contributing pair of
    terms is constant on atoms (|nu| + |beta| bounds the source length of a
    product of Z(mu, nu) and Z(alpha, beta)).  Candidates are, per pair of
    terms, the atoms inside range(first) x source(second), plus every atom
    where the computed product is nonzero; elsewhere both sides vanish.
    """
    E = f.graph
    h = multiply(f, g)
    pairs = defaultdict(list)
    for _, s in f.terms:
        for _, t in g.terms:
            pairs[s.degree + t.degree].append((s, t))
    h_by_degree = defaultdict(list)
    for c, t in h.terms:
        h_by_degree[t.degree].append((c, t))
    bad = []
    for d in sorted(set(pairs) | set(h_by_degree)):
        hd = GraphAlgebraElement(E, h_by_degree.get(d, ()))
        if depth is None:
            dd = max([len(t.nu) for _, t in hd.terms] + [len(s.nu) + len(t.nu) for s, t in pairs.get(d, ())])
            ev = _atom_values(hd, dd)
        else:
            dd = depth
            ev = evaluate_at_depth(hd, dd)
        cand = set(ev)
        for s, t in pairs.get(d, ()):
            rng = [(s.mu, _start(E, s.mu, s.vertex))]
            src = [(t.nu, _start(E, t.nu, t.vertex))]
            cand.update(atoms(E, dd, [d], rng, src))
        for a in sorted(cand):
            want = convolution_at(f, g, atom_point(E, a))
            if want != ev.get(a, ZERO):
                bad.append((a, ev.get(a, ZERO), want))
    return bad


def involution_mismatches(f: GraphAlgebraElement, depth: int | None = None) -> list:
    """Atoms where involute_g(f) differs from x -> conj f(x^-1) pointwise."""
    E = f.graph
    h = involute_g(f)
    if depth is None:
        depth = max([len(t.nu) for _, t in h.terms] + [len(t.mu) for _, t in f.terms])
        ev = _atom_values(h, depth)
    else:
        ev = evaluate_at_depth(h, depth)
    degrees = {-t.degree for _, t in f.terms}
    rng = [(t.nu, _start(E, t.nu, t.vertex)) for _, t in f.terms]
    src = [(t.mu, _start(E, t.mu, t.vertex)) for _, t in f.terms]
    cand = set(atoms(E, depth, degrees, rng, src)) | set(ev)
    bad = []
    for a in sorted(cand):
        x, k, y = atom_point(E, a)
        want = value_at(f, (y, -k, x)).conjugate()
        if want != ev.get(a, ZERO):
            bad.append((a, ev.get(a, ZERO), want))
    return bad
