"""Column reduction of Fuss tableaux and its fiber structure (m = kn+1 only).

Removing column 1 of a tableau and renumbering drops it from n to n-1
columns; the map on paths induced through their tableaux is many-to-one
with fiber size equal to the foot of column 1.  The two fiber constructions
below (cutting the reduced preimage at every small rank, and freeing the
first bottom-row entry) build the exact same tableau set, and the row sums
of a tableau read off area and coarea of its path directly.
"""

from __future__ import annotations

from bisect import bisect_left

from .core import DyckPath, make_frame, parse_path, ranks
from .errors import NotFuss, RankNotPresent, RankTooLarge, TooNarrow
from .fuss import FussTableau, invert_fuss, tableau_from_bottom_row, tableau_to_sw
from .sweep import sweep


def _require_plus(T: FussTableau, op: str) -> None:
    if T.sign != +1:
        raise ValueError(f"{op} is defined for sign +1 tableaux only")


def red(T: FussTableau) -> FussTableau:
    """Remove column 1 and renumber the remaining entries contiguously."""
    _require_plus(T, "red")
    if T.n < 2:
        raise TooNarrow("cannot remove the only column")
    col1 = T.columns[0]
    new_columns = tuple(
        tuple(e - bisect_left(col1, e) for e in col) for col in T.columns[1:]
    )
    return FussTableau(k=T.k, n=T.n - 1, sign=+1, columns=new_columns)


def psi(T: FussTableau) -> FussTableau:
    """Half-turn involution: entry (i, j) becomes (k+1)n+1 - T[k+2-i, n+1-j]."""
    _require_plus(T, "psi")
    total = (T.k + 1) * T.n
    flipped = tuple(
        tuple(total + 1 - e for e in reversed(col)) for col in reversed(T.columns)
    )
    return FussTableau(k=T.k, n=T.n, sign=+1, columns=flipped)


def fiber_count(T_reduced: FussTableau) -> int:
    """Number of tableaux reducing to T_reduced: the foot of its column 1."""
    _require_plus(T_reduced, "fiber_count")
    return T_reduced.columns[0][-1]


def fiber_by_bottom_rows(T_reduced: FussTableau) -> list[FussTableau]:
    """All preimages of red, rebuilt from their bottom rows.

    The bottom rows agree except in the first entry, which ranges over
    k+1 .. k + b'_1; returned in increasing order of that entry.
    """
    _require_plus(T_reduced, "fiber_by_bottom_rows")
    k, n = T_reduced.k, T_reduced.n + 1
    tail = [b + k + 1 for b in T_reduced.bottom_row()]
    first = T_reduced.columns[0][-1]
    return [
        tableau_from_bottom_row(k, n, [b1] + tail) for b1 in range(k + 1, k + first + 1)
    ]


def cut_and_lift(preimage: DyckPath, r: int) -> DyckPath:
    """Cut a reduced-frame preimage at the rank-r vertex and lift it.

    With preimage = A B cut at the vertex of rank r < m', the lifted path is
    N B A E^k one frame up; its sweep image reduces back to the original
    tableau, and its cobounce exceeds the reduced one by exactly r.
    """
    frame = preimage.frame
    if frame.fuss is None or frame.fuss.sign != +1:
        raise NotFuss("cut_and_lift needs an m = kn+1 frame")
    k = frame.fuss.k
    if r >= frame.m:
        raise RankTooLarge(f"rank {r} >= {frame.m} lifts to no valid path")
    try:
        i = ranks(preimage).index(r)
    except ValueError:
        raise RankNotPresent(f"rank {r} is not a vertex rank") from None
    lifted_frame = make_frame(k * (frame.n + 1) + 1, frame.n + 1)
    word = "N" + preimage.steps[i:] + preimage.steps[:i] + "E" * k
    return parse_path(lifted_frame, word)


def fiber_by_cutting(T_reduced: FussTableau) -> list[DyckPath]:
    """All paths whose tableau reduces to T_reduced, via preimage cutting.

    Returned in increasing order of the cut rank; the list has exactly
    fiber_count(T_reduced) members.
    """
    _require_plus(T_reduced, "fiber_by_cutting")
    reduced_path = tableau_to_sw(T_reduced).as_path()
    preimage = invert_fuss(reduced_path)
    cut_ranks = sorted(r for r in ranks(preimage) if r < preimage.frame.m)
    return [sweep(cut_and_lift(preimage, r)) for r in cut_ranks]


def coarea_from_top_row(T: FussTableau) -> int:
    """coarea of the encoded path: sum of first-row entries minus C(n+1, 2)."""
    _require_plus(T, "coarea_from_top_row")
    n = T.n
    return sum(T.first_row()) - n * (n + 1) // 2


def area_from_bottom_row(T: FussTableau) -> int:
    """area of the encoded path: sum of bottom-row entries minus (k+1) C(n+1, 2)."""
    _require_plus(T, "area_from_bottom_row")
    n = T.n
    return sum(T.bottom_row()) - (T.k + 1) * n * (n + 1) // 2


def reduced_path_of(path: DyckPath) -> DyckPath:
    """The unique one-column-narrower path whose tableau is red of the path's.

    Geometric form: strip the sweep preimage's leading North step and
    trailing k East steps, then rotate the remainder to start at its
    lowest-rank vertex; the result is the reduced frame's sweep preimage.
    """
    frame = path.frame
    if frame.fuss is None or frame.fuss.sign != +1:
        raise NotFuss("reduction needs an m = kn+1 frame")
    if frame.n < 2:
        raise TooNarrow("cannot reduce a single-row frame")
    k = frame.fuss.k
    preimage = invert_fuss(path)
    middle = preimage.steps[1 : len(preimage.steps) - k]
    reduced_frame = make_frame(k * (frame.n - 1) + 1, frame.n - 1)
    m_, n_ = reduced_frame.m, reduced_frame.n
    r = 0
    best, best_at = 0, 0
    for i, ch in enumerate(middle):
        if r < best:
            best, best_at = r, i
        r += m_ if ch == "N" else -n_
    rotated = middle[best_at:] + middle[:best_at]
    return sweep(parse_path(reduced_frame, rotated))
