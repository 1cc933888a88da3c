"""Lower bounds, the table of proven values, and the extreme-color rule."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Family, FamilySpec, Graph, is_regular, max_degree

__all__ = [
    "KnownValue",
    "lb_max_degree",
    "lb_regular",
    "best_lower_bound",
    "known_chi_g",
    "extreme_color_set",
    "NoGracefulColoring",
]


class NoGracefulColoring(ValueError):
    """Raised when a palette is provably too small (``k <= degree``)."""


@dataclass(frozen=True)
class KnownValue:
    spec: FamilySpec
    chi_g: int
    source: str


def lb_max_degree(g: Graph) -> int:
    """A vertex and its neighbours need pairwise distinct colors: ``Δ + 1``."""
    return max_degree(g) + 1


def lb_regular(g: Graph) -> Optional[int]:
    """``r + 2`` for an ``r``-regular graph with ``r ≥ 2``, else ``None``."""
    r = is_regular(g)
    if r is None or r < 2:
        return None
    return r + 2


def best_lower_bound(g: Graph) -> int:
    return max(lb_max_degree(g), lb_regular(g) or 0)


def known_chi_g(spec: FamilySpec) -> Optional[KnownValue]:
    """Proven graceful chromatic number for ``spec``, or ``None`` outside the proven ranges."""
    fam, n = spec.family, spec.n
    value = source = None
    if fam is Family.PATH and n >= 5:
        value, source = 5, "paths, n>=5"
    elif fam is Family.CYCLE and n >= 4:
        value, source = (5 if n == 5 else 4), "cycles, n>=4"
    elif fam is Family.CLOSED_LADDER:
        value, source = (4, "L_2 = C_4") if n == 2 else (5, "closed ladder, n>=3")
    elif fam is Family.OPEN_LADDER and n >= 4:
        value, source = 5, "open ladder, n>3"
    elif fam is Family.SLANTING_LADDER and n >= 4:
        value, source = 5, "slanting ladder, n>=4"
    elif fam is Family.TRIANGULAR_LADDER and n >= 3:
        value, source = (6, "triangular ladder, n=3,4") if n <= 4 else (7, "triangular ladder, n>=5")
    elif fam is Family.OPEN_TRIANGULAR_LADDER and n >= 5:
        value, source = 7, "open triangular ladder, n>=5"
    elif fam is Family.DIAGONAL_LADDER and n >= 5:
        value, source = (8, "diagonal ladder, n=5,6") if n <= 6 else (9, "diagonal ladder, n>=7")
    elif fam is Family.OPEN_DIAGONAL_LADDER and n >= 7:
        value, source = 9, "open diagonal ladder, n>=7"
    elif fam is Family.CIRCULAR_LADDER and n >= 4:
        value, source = (5, "circular ladder, n=0 mod 4") if n % 4 == 0 else (6, "circular ladder, n!=0 mod 4")
    if value is None:
        return None
    return KnownValue(spec, value, source)


def extreme_color_set(k: int, delta: int) -> frozenset[int]:
    """Colors a degree-``delta`` vertex may take in a graceful ``k``-coloring.

    With ``i = k - delta`` spare colors the vertex must sit within the first
    or last ``i`` colors: its ``delta`` incident labels are distinct distances
    and only ``max(c - 1, k - c)`` distances are available from color ``c``.
    """
    if k <= delta:
        raise NoGracefulColoring(f"k={k} ≤ degree {delta}: no graceful coloring exists")
    i = k - delta
    return frozenset(range(1, min(i, k) + 1)) | frozenset(range(max(k - i + 1, 1), k + 1))
