"""Exact Steinberg algebras of finite groupoids and graph groupoids, with
checkers for effectiveness, minimality and simplicity."""

from .algebra import AlgebraElement, convolve, ideal_generated_by, involute, is_simple_algebra
from .check import is_effective, is_minimal, is_topologically_principal
from .errors import SteinbergError
from .gaussian import GaussianRational
from .graph import DirectedGraph, GraphAlgebraElement, graph_simplicity_verdict, make_graph
from .groupoid import FiniteGroupoid, action_groupoid, disjoint_union, group_groupoid, isotropy_bundle, pair_groupoid
from .report import SimplicityReport

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "DirectedGraph",
    "FiniteGroupoid",
    "GaussianRational",
    "GraphAlgebraElement",
    "SimplicityReport",
    "SteinbergError",
    "action_groupoid",
    "convolve",
    "disjoint_union",
    "graph_simplicity_verdict",
    "group_groupoid",
    "ideal_generated_by",
    "involute",
    "is_effective",
    "is_minimal",
    "is_simple_algebra",
    "is_topologically_principal",
    "isotropy_bundle",
    "make_graph",
    "pair_groupoid",
]
