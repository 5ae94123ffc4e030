"""Stag Hunt coordination game analysis: equilibria, dominance, parameter
sweeps, and two-population replicator dynamics."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
