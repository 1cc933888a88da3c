"""Closed-form graceful colorings for the ladder families.

Each ``color_*`` function returns one canonical coloring that uses exactly the
optimal palette for its family and size.  Open ladders reuse the coloring of
the corresponding closed ladder on the same vertex names.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import VertexColoring
from .graphs import Family, FamilySpec, Vertex, _rails

__all__ = [
    "ConstructionResult",
    "color_closed_ladder",
    "color_open_ladder",
    "color_slanting_ladder",
    "color_triangular_ladder",
    "color_open_triangular_ladder",
    "color_diagonal_ladder",
    "color_open_diagonal_ladder",
    "color_circular_ladder",
    "construct",
    "CONSTRUCTION_MIN_N",
]


@dataclass(frozen=True)
class ConstructionResult:
    coloring: VertexColoring
    claimed_chi_g: int
    source_case: str
    spec: FamilySpec

    def rails(self) -> tuple[list[int], list[int]]:
        n = self.spec.n
        f = self.coloring
        return (
            [f[Vertex("x", i)] for i in range(1, n + 1)],
            [f[Vertex("y", i)] for i in range(1, n + 1)],
        )

    def grid(self) -> str:
        """Two-row text grid, x-rail over y-rail."""
        xs, ys = self.rails()
        width = max(len(str(c)) for c in xs + ys)
        row = lambda name, cs: name + " | " + " ".join(str(c).rjust(width) for c in cs)
        return "\n".join([row("x", xs), row("y", ys)])


def _require(n: int, lo: int, what: str) -> None:
    if n < lo:
        raise ValueError(f"{what}: closed-form coloring needs n ≥ {lo} (got {n})")


def _from_rails(k: int, xs, ys) -> VertexColoring:
    x, y = _rails(len(xs))
    colors = dict(zip(x[1:], xs))
    colors.update(zip(y[1:], ys))
    return VertexColoring(k, colors)


def _result(family: Family, n: int, k: int, xs, ys, case: str) -> ConstructionResult:
    return ConstructionResult(_from_rails(k, xs, ys), k, case, FamilySpec(family, n))


# -- closed / open ladder -------------------------------------------------

def _closed_ladder_rails(n: int) -> tuple[list[int], list[int], str]:
    if n == 2:
        # 4-cycle x1 x2 y2 y1 colored 1 2 4 3
        return [1, 2], [3, 4], "n=2, L_2 = C_4"
    if n == 3:
        return [3, 1, 2], [2, 5, 4], "n=3 table"
    x_by = {2: 1, 3: 2, 0: 4, 1: 5}
    y_by = {0: 1, 1: 2, 2: 4, 3: 5}
    xs = [3 if i == 1 else x_by[i % 4] for i in range(1, n + 1)]
    ys = [y_by[j % 4] for j in range(1, n + 1)]
    return xs, ys, "n>3, period 4"


def color_closed_ladder(n: int) -> ConstructionResult:
    _require(n, 2, "closed ladder")
    xs, ys, case = _closed_ladder_rails(n)
    return _result(Family.CLOSED_LADDER, n, 4 if n == 2 else 5, xs, ys, case)


def color_open_ladder(n: int) -> ConstructionResult:
    _require(n, 4, "open ladder")
    xs, ys, case = _closed_ladder_rails(n)
    return _result(Family.OPEN_LADDER, n, 5, xs, ys, f"restriction of L_n ({case})")


# -- slanting ladder ------------------------------------------------------

def color_slanting_ladder(n: int) -> ConstructionResult:
    """Period-4 coloring with support ``{1, 2, 4, 5}``; every diagonal gets label 1."""
    _require(n, 4, "slanting ladder")
    x_by = {1: 1, 3: 2, 2: 4, 0: 5}
    y_by = {0: 1, 2: 2, 1: 4, 3: 5}
    xs = [x_by[i % 4] for i in range(1, n + 1)]
    ys = [y_by[j % 4] for j in range(1, n + 1)]
    return _result(Family.SLANTING_LADDER, n, 5, xs, ys, "n>=4, period 4")


# -- triangular ladder ----------------------------------------------------

_TL_SMALL = ([4, 2, 6, 4], [3, 1, 5, 3])


def _triangular_rails(n: int) -> tuple[list[int], list[int], int, str]:
    if n <= 4:
        xs, ys = _TL_SMALL
        return xs[:n], ys[:n], 6, "n=3,4 table"
    x_by = {1: 2, 2: 3, 0: 6}
    y_by = {0: 1, 1: 5, 2: 7}
    xs = [x_by[i % 3] for i in range(1, n + 1)]
    ys = [4 if j == 1 else y_by[j % 3] for j in range(1, n + 1)]
    return xs, ys, 7, "n>=5, period 3"


def color_triangular_ladder(n: int) -> ConstructionResult:
    _require(n, 3, "triangular ladder")
    xs, ys, k, case = _triangular_rails(n)
    return _result(Family.TRIANGULAR_LADDER, n, k, xs, ys, case)


def color_open_triangular_ladder(n: int) -> ConstructionResult:
    _require(n, 5, "open triangular ladder")
    xs, ys, k, case = _triangular_rails(n)
    return _result(Family.OPEN_TRIANGULAR_LADDER, n, k, xs, ys, f"restriction of TL_n ({case})")


# -- diagonal ladder ------------------------------------------------------

_DL_SMALL = ([5, 7, 3, 1, 7, 5], [4, 2, 8, 6, 2, 4])


def _diagonal_rails(n: int) -> tuple[list[int], list[int], int, str]:
    if n <= 6:
        xs, ys = _DL_SMALL
        return xs[:n], ys[:n], 8, "n=5,6 table"
    x_by = {1: 7, 2: 1, 3: 8, 0: 4}
    y_by = {1: 6, 2: 2, 3: 9, 0: 3}
    xs = [x_by[i % 4] for i in range(1, n + 1)]
    ys = [5 if j == 1 else y_by[j % 4] for j in range(1, n + 1)]
    return xs, ys, 9, "n>=7, period 4"


def color_diagonal_ladder(n: int) -> ConstructionResult:
    _require(n, 5, "diagonal ladder")
    xs, ys, k, case = _diagonal_rails(n)
    return _result(Family.DIAGONAL_LADDER, n, k, xs, ys, case)


def color_open_diagonal_ladder(n: int) -> ConstructionResult:
    _require(n, 7, "open diagonal ladder")
    xs, ys, k, case = _diagonal_rails(n)
    return _result(Family.OPEN_DIAGONAL_LADDER, n, k, xs, ys, f"restriction of DL_n ({case})")


# -- circular ladder ------------------------------------------------------

_CL_X = (1, 2, 5, 4)
_CL_Y = (5, 4, 1, 2)
# Six closing columns for n = 2 (mod 4).  Every 3-column window of
# block^m + seam occurs in n = 6, 10 or 14, all of which are validated.
_CL_SEAM_X = (1, 2, 6, 3, 2, 4)
_CL_SEAM_Y = (5, 4, 1, 5, 6, 3)


def color_circular_ladder(n: int) -> ConstructionResult:
    """Period-4 rails ``x: 1 2 5 4``, ``y: 5 4 1 2`` closed up around the cycle.

    ``n = 0 (mod 4)`` closes directly with 5 colors.  Odd ``n`` recolors the
    last two columns (``x: 3 4``, ``y: 6 2``).  ``n = 2 (mod 4)`` replaces
    the last six columns with a fixed seam.
    """
    _require(n, 4, "circular ladder")
    xs = [_CL_X[(i - 1) % 4] for i in range(1, n + 1)]
    ys = [_CL_Y[(i - 1) % 4] for i in range(1, n + 1)]
    r = n % 4
    if r == 0:
        return _result(Family.CIRCULAR_LADDER, n, 5, xs, ys, "n=0 mod 4, period 4")
    if r in (1, 3):
        xs[n - 2], xs[n - 1] = 3, 4
        ys[n - 2], ys[n - 1] = 6, 2
        return _result(Family.CIRCULAR_LADDER, n, 6, xs, ys, f"n={r} mod 4, seam at n-1, n")
    xs[n - 6:] = _CL_SEAM_X
    ys[n - 6:] = _CL_SEAM_Y
    return _result(Family.CIRCULAR_LADDER, n, 6, xs, ys, "n=2 mod 4, six-column seam")


_BUILDERS = {
    Family.CLOSED_LADDER: color_closed_ladder,
    Family.OPEN_LADDER: color_open_ladder,
    Family.SLANTING_LADDER: color_slanting_ladder,
    Family.TRIANGULAR_LADDER: color_triangular_ladder,
    Family.OPEN_TRIANGULAR_LADDER: color_open_triangular_ladder,
    Family.DIAGONAL_LADDER: color_diagonal_ladder,
    Family.OPEN_DIAGONAL_LADDER: color_open_diagonal_ladder,
    Family.CIRCULAR_LADDER: color_circular_ladder,
}

CONSTRUCTION_MIN_N = {
    Family.CLOSED_LADDER: 2,
    Family.OPEN_LADDER: 4,
    Family.SLANTING_LADDER: 4,
    Family.TRIANGULAR_LADDER: 3,
    Family.OPEN_TRIANGULAR_LADDER: 5,
    Family.DIAGONAL_LADDER: 5,
    Family.OPEN_DIAGONAL_LADDER: 7,
    Family.CIRCULAR_LADDER: 4,
}


def construct(spec: FamilySpec) -> ConstructionResult:
    """Dispatch to the family's closed-form coloring."""
    try:
        builder = _BUILDERS[spec.family]
    except KeyError:
        raise ValueError(f"no closed-form ladder coloring for family {spec.family.value}") from None
    return builder(spec.n)
