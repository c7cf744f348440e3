"""Purities and concentratable entanglement of graph states.

Qubit labels are 1-indexed throughout. Exact values come back as Fraction.
"""

from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional

from ._core import (
    Graph,
    Graph6Error,
    distinct_sets,
    max_achievers,
    rank_index,
    schmidt_rank,
    spectrum,
)
from . import _core

__all__ = [
    "Graph",
    "Graph6Error",
    "SurveyRow",
    "ce",
    "ce_bounds",
    "distinct_sets",
    "max_achievers",
    "purity",
    "rank_index",
    "schmidt_rank",
    "spectrum",
    "survey",
]


def _frac(pair) -> Fraction:
    num, log2_den = pair
    return Fraction(num, 1 << log2_den)


def purity(graph: Graph, kept: Iterable[int]) -> Fraction:
    """Tr rho^2 of the reduced state on `kept`."""
    return _frac(_core._purity(graph, list(kept)))


def ce(graph: Graph, subset: Optional[Iterable[int]] = None) -> Fraction:
    """Concentratable entanglement; the full qubit set when `subset` is None."""
    return _frac(_core._ce(graph, [] if subset is None else list(subset)))


def ce_bounds(n: int):
    lo, hi = _core._bounds(n)
    return _frac(lo), _frac(hi)


class SurveyRow(NamedTuple):
    graph6: str
    ce: Fraction
    distinct_purities: int
    achieves_min: bool
    achieves_max: bool


def survey(n: int) -> List[SurveyRow]:
    """Connected graphs on n vertices up to isomorphism, sorted by CE."""
    return [SurveyRow(g6, _frac(v), d, lo, hi) for g6, v, d, lo, hi in _core._survey(n)]
