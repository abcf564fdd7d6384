"""JSON text formats for groupoids, elements, graphs and systems.

Coefficients are written as ``[re_num, re_den, im_num, im_den]``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Mapping

from .algebra import AlgebraElement
from .errors import ParseError
from .exel_vershik import (
    NATURALS,
    SHIFT,
    ExelVershikSystem,
    FiniteMonoid,
    finite_system,
    full_action,
    make_monoid,
    monoid_from_group,
)
from .gaussian import GaussianRational
from .graph import DirectedGraph, GraphAlgebraElement, PathPairTerm, graph_to_dict, term, validate_graph
from .groupoid import FiniteGroupoid, action_groupoid, group_groupoid, group_table, pair_groupoid, validate

FORMAT_VERSION = "1"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def load_source(arg: str) -> Any:
    """Inline JSON, or the path of a file holding JSON."""
    stripped = arg.lstrip()
    if stripped[:1] in "{[":
        return loads(arg)
    try:
        text = Path(arg).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {arg}: {exc.strerror}") from None
    return loads(text)


def _need(data, key, kind=None):
    if not isinstance(data, Mapping) or key not in data:
        raise ParseError(f"missing key {key!r}")
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise ParseError(f"key {key!r} has the wrong type")
    return value


# -- coefficients -----------------------------------------------------------------


def coeff_to_json(c: GaussianRational) -> list[int]:
    return c.to_list()


def coeff_from_json(data) -> GaussianRational:
    if isinstance(data, int) and not isinstance(data, bool):
        return GaussianRational(data)
    if not (isinstance(data, list) and len(data) == 4 and all(isinstance(x, int) and not isinstance(x, bool) for x in data)):
        raise ParseError(f"coefficient must be four integers, got {data!r}")
    if data[1] == 0 or data[3] == 0:
        raise ParseError("zero denominator in coefficient")
    return GaussianRational.from_list(data)


# -- groupoids --------------------------------------------------------------------


def groupoid_to_json(G: FiniteGroupoid) -> dict:
    lab = G.labels
    out = {
        "morphisms": list(lab),
        "range": {lab[g]: lab[G.range[g]] for g in range(G.n)},
        "source": {lab[g]: lab[G.source[g]] for g in range(G.n)},
        "compose": [[lab[g], lab[h], lab[gh]] for g, h, gh in G.composable],
        "inverse": {lab[g]: lab[G.inverse[g]] for g in range(G.n)},
    }
    if G.name:
        out["name"] = G.name
    return out


def _table(data):
    return group_table(_need(data, "elements", list), _need(data, "table", list))


def groupoid_from_json(data) -> FiniteGroupoid:
    """Full tables, or one of the shorthands ``{"pair": n}``,
    ``{"group": {"elements", "table"}}``, ``{"action": {"group", "points", "map"}}``."""
    if not isinstance(data, Mapping):
        raise ParseError("groupoid description must be an object")
    name = str(data.get("name", ""))
    try:
        if "pair" in data:
            n = data["pair"]
            if not isinstance(n, int) or n < 1:
                raise ParseError("pair needs a positive integer")
            G = pair_groupoid(n)
            return FiniteGroupoid(G.labels, G.range, G.source, G.table, G.inverse, name or G.name)
        if "group" in data:
            return group_groupoid(_table(data["group"]), name)
        if "action" in data:
            desc = data["action"]
            t = _table(_need(desc, "group"))
            points = _need(desc, "points", list)
            # only generators need listing; the rest follows by composition
            S = finite_system(monoid_from_group(t), points, _need(desc, "map", dict), name)
            return action_groupoid(t, points, full_action(S), name)
        return validate(
            _need(data, "morphisms", list),
            _need(data, "range", dict),
            _need(data, "source", dict),
            _need(data, "compose", list),
            _need(data, "inverse", dict),
            name,
        )
    except (KeyError, TypeError, IndexError) as exc:
        raise ParseError(f"malformed groupoid description: {exc}") from None


def element_to_json(f: AlgebraElement) -> dict:
    G = f.groupoid
    return {G.labels[g]: coeff_to_json(c) for g, c in enumerate(f.coeffs) if c}


def element_from_json(G: FiniteGroupoid, data) -> AlgebraElement:
    if not isinstance(data, Mapping):
        raise ParseError("element must be an object {label: coefficient}")
    values = {}
    for k, v in data.items():
        if str(k) not in G.labels:
            raise ParseError(f"unknown morphism {k!r}")
        values[str(k)] = coeff_from_json(v)
    return AlgebraElement.from_mapping(G, values)


# -- graphs -----------------------------------------------------------------------


def graph_from_json(data) -> DirectedGraph:
    if not isinstance(data, Mapping):
        raise ParseError("graph description must be an object")
    _need(data, "vertices", list)
    _need(data, "edges", list)
    try:
        return validate_graph(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph description: {exc}") from None


def graph_to_json(E: DirectedGraph) -> dict:
    return graph_to_dict(E)


def graph_element_to_json(x: GraphAlgebraElement) -> list:
    out = []
    for c, t in x.terms:
        item = {"coeff": coeff_to_json(c), "mu": list(t.mu), "nu": list(t.nu)}
        if not t.mu and not t.nu:
            item["vertex"] = t.vertex
        out.append(item)
    return out


def graph_element_from_json(E: DirectedGraph, data) -> GraphAlgebraElement:
    if not isinstance(data, list):
        raise ParseError("graph element must be a list of terms")
    terms = []
    for item in data:
        mu = _need(item, "mu", list)
        nu = _need(item, "nu", list)
        try:
            t = term(E, [str(e) for e in mu], [str(e) for e in nu], item.get("vertex"))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        terms.append((coeff_from_json(_need(item, "coeff")), t))
    return GraphAlgebraElement(E, terms)


# -- systems ----------------------------------------------------------------------


def monoid_to_json(M: FiniteMonoid) -> dict:
    return {"elements": list(M.elements), "table": [[M.elements[x] for x in row] for row in M.table]}


def system_to_json(S: ExelVershikSystem) -> dict:
    if S.is_shift:
        out = {"monoid": NATURALS, "space": graph_to_json(S.space), "action": SHIFT}
    else:
        out = {
            "monoid": monoid_to_json(S.monoid),
            "space": list(S.space),
            "action": {g: dict(m) for g, m in S.action.items()},
        }
    if S.name:
        out["name"] = S.name
    return out


def system_from_json(data) -> ExelVershikSystem:
    monoid = _need(data, "monoid")
    space = _need(data, "space")
    action = _need(data, "action")
    name = str(data.get("name", ""))
    if monoid == NATURALS:
        if action != SHIFT:
            raise ParseError('the naturals act by "shift" only')
        E = graph_from_json(space)
        return ExelVershikSystem(NATURALS, E, SHIFT, name or E.name)
    if not isinstance(space, list) or not isinstance(action, Mapping):
        raise ParseError("finite systems need a point list and an action object")
    M = make_monoid(_need(monoid, "elements", list), _need(monoid, "table", list))
    for g, m in action.items():
        if str(g) not in M.elements:
            raise ParseError(f"action names unknown monoid element {g!r}")
        if not isinstance(m, Mapping):
            raise ParseError(f"action of {g!r} must be an object")
    return finite_system(M, space, action, name)


# -- result records ---------------------------------------------------------------


def jsonable(x):
    """Convert witnesses (sets, tuples, coefficients, ...) into JSON data."""
    if isinstance(x, GaussianRational):
        return coeff_to_json(x)
    if isinstance(x, PathPairTerm):
        return {"mu": list(x.mu), "nu": list(x.nu), "vertex": x.vertex}
    if isinstance(x, (set, frozenset)):
        items = [jsonable(v) for v in x]
        try:
            return sorted(items)
        except TypeError:
            return items
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, Mapping):
        return {str(k): jsonable(v) for k, v in x.items()}
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return str(x)


@dataclass
class ResultRecord:
    command: list[str]
    verdicts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    timing: float = 0.0
    format_version: str = FORMAT_VERSION

    def to_json(self) -> str:
        return json.dumps(jsonable(asdict(self)), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ResultRecord":
        data = loads(text)
        if "format_version" not in data:
            raise ParseError("result record lacks format_version")
        return cls(
            list(data["command"]), dict(data.get("verdicts", {})), dict(data.get("witnesses", {})),
            float(data.get("timing", 0.0)), str(data["format_version"]),
        )
