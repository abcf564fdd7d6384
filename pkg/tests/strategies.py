"""Shared hypothesis strategies and catalogue handles for the tests."""

from fractions import Fraction

from hypothesis import strategies as st

from steinberg.catalogue import graph_catalogue, groupoid_catalogue
from steinberg.gaussian import GaussianRational

small_fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
gaussians = st.builds(GaussianRational, small_fractions, small_fractions)

GROUPOIDS = groupoid_catalogue()
GRAPHS = graph_catalogue()
