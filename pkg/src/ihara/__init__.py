"""Exact Ihara zeta functions of finite graphs."""

__version__ = "0.1.0"

from .algebra import IntMatrix, IntPolynomial, RationalSeries
from .graph import Graph, generate, parse_graph
from .zeta import bass_general, ramanujan_check, zeta_reciprocal_bass, zeta_reciprocal_hashimoto

__all__ = [
    "Graph",
    "IntMatrix",
    "IntPolynomial",
    "RationalSeries",
    "bass_general",
    "generate",
    "parse_graph",
    "ramanujan_check",
    "zeta_reciprocal_bass",
    "zeta_reciprocal_hashimoto",
]
