"""Tableau encoding of Fuss paths and the O(m+n) sweep-map inversion.

For m = kn+1 the SW word of a path fills a (k+1) x n standard tableau, one
new column per S, each W going below the smallest active column foot
(active: bottom of a column not yet of full height).  A closed walk through
the tableau labels then spells the step word of the sweep preimage, so a
path is inverted in two linear passes with no search.

For m = kn-1 the same filling leaves the rectangle two cells short; the
rules below run on the rectangle completed by continuing the filling with
two virtual labels m+n and m+n+1, with the walk redirections mirrored
(+1 turns at foot+1 and slides down, -1 turns at foot-1 and slides up).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .core import DyckPath, Frame, make_frame
from .errors import (
    NotFuss,
    NotSingleCycle,
    PrematureStall,
    RowConstraintViolated,
)
from .sweep import SWWord, ENWord, S_STEP, W_STEP, steps_to_sw


@dataclass(frozen=True)
class FussTableau:
    """Column-filled array for a Fuss frame m = kn + sign.

    ``columns`` holds the real entries 1 .. m+n-1 only.  For sign +1 that is
    the full (k+1) x n rectangle; for sign -1 the shape is ragged, two cells
    short, and the two virtual labels m+n, m+n+1 live only in the completed
    view used by the walk.
    """

    k: int
    n: int
    sign: int
    columns: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return self.k * self.n + self.sign

    @property
    def size(self) -> int:
        """m + n of the underlying frame."""
        return self.m + self.n

    def frame(self) -> Frame:
        return make_frame(self.m, self.n)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        height = max(len(c) for c in self.columns)
        return tuple(
            tuple(c[i] for c in self.columns if len(c) > i) for i in range(height)
        )

    def first_row(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.columns)

    def completed_columns(self) -> tuple[tuple[int, ...], ...]:
        """Columns with the sign -1 virtual labels appended (no-op for +1)."""
        if self.sign > 0:
            return self.columns
        cols = [list(c) for c in self.columns]
        # Continue the filling: each virtual W goes below the smallest
        # incomplete foot, which is the least recently extended column.
        label = self.size
        while True:
            short = [c for c in cols if len(c) < self.k + 1]
            if not short:
                break
            target = min(short, key=lambda c: c[-1])
            target.append(label)
            label += 1
        return tuple(tuple(c) for c in cols)

    def bottom_row(self) -> tuple[int, ...]:
        """Feet of the completed columns (row k+1)."""
        return tuple(c[-1] for c in self.completed_columns())

    def validate(self) -> None:
        """Check all defining invariants; raises ValueError on violation."""
        k, n, sign = self.k, self.n, self.sign
        if sign not in (+1, -1) or k < 1 or n < 1:
            raise ValueError("bad tableau parameters")
        if len(self.columns) != n:
            raise ValueError(f"expected {n} columns, got {len(self.columns)}")
        entries = [e for c in self.columns for e in c]
        if sorted(entries) != list(range(1, self.size)):
            raise ValueError("entries must be exactly 1 .. m+n-1")
        cols = self.completed_columns()
        if any(len(c) != k + 1 for c in cols):
            raise ValueError("completed columns must have height k+1")
        for c in cols:
            if any(a >= b for a, b in zip(c, c[1:])):
                raise ValueError("columns must increase downwards")
        for i in range(k + 1):
            row = [c[i] for c in cols]
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError("rows must increase rightwards")
        column_of = {e: j for j, c in enumerate(cols) for e in c}
        for c in cols:
            for a, d in zip(c, c[1:]):
                seen = set()
                for e in range(a + 1, d):
                    j = column_of[e]
                    if j in seen:
                        raise ValueError(
                            f"entries between {a} and {d} repeat column {j + 1}"
                        )
                    seen.add(j)
        if sign > 0:
            for j, t in enumerate(self.first_row(), start=1):
                if t > 1 + (j - 1) * (k + 1):
                    raise ValueError(f"first row entry {j} too large")
            for j, b in enumerate(self.bottom_row(), start=1):
                if b < j * (k + 1):
                    raise ValueError(f"bottom row entry {j} too small")

    def to_json(self) -> str:
        return json.dumps(
            {
                "k": self.k,
                "n": self.n,
                "sign": self.sign,
                "rows": [list(r) for r in self.rows()],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "FussTableau":
        data = json.loads(text)
        k, n, sign = int(data["k"]), int(data["n"]), int(data["sign"])
        rows = data["rows"]
        width = len(rows[0])
        columns = tuple(
            tuple(row[j] for row in rows if len(row) > j) for j in range(width)
        )
        tab = cls(k=k, n=n, sign=sign, columns=columns)
        tab.validate()
        return tab

    def render_text(self) -> str:
        width = len(str(self.size - 1))
        return "\n".join(
            " ".join(str(e).rjust(width) for e in row) for row in self.rows()
        )


@dataclass(frozen=True)
class WalkPermutation:
    """Visiting order of the labels 1 .. m+n; a single cycle starting at 1."""

    order: tuple[int, ...]


def _fuss_params(frame: Frame) -> tuple[int, int]:
    if frame.fuss is None:
        raise NotFuss(f"({frame.m}, {frame.n}) is not a Fuss frame")
    return frame.fuss.k, frame.fuss.sign


def _fill_columns(letters: str, k: int) -> list[list[int]]:
    """Run the column filling over the first m+n-1 letters."""
    columns: list[list[int]] = []
    active: deque[int] = deque()
    full = k + 1
    for label, ch in enumerate(letters[:-1], start=1):
        if ch == S_STEP:
            active.append(len(columns))
            columns.append([label])
        else:
            if not active:
                raise PrematureStall(f"no active column for label {label}")
            c = active.popleft()
            col = columns[c]
            col.append(label)
            if len(col) < full:
                active.append(c)
    return columns


def fill_tableau(sw: SWWord) -> FussTableau:
    """Build the tableau of a Fuss SW word (one new column per S)."""
    k, sign = _fuss_params(sw.frame)
    columns = _fill_columns(sw.letters, k)
    return FussTableau(
        k=k, n=sw.frame.n, sign=sign, columns=tuple(tuple(c) for c in columns)
    )


def path_tableau(path: DyckPath) -> FussTableau:
    """Tableau of the path's own step word; it encodes the sweep preimage."""
    return fill_tableau(SWWord(path.frame, steps_to_sw(path.steps)))


def tableau_to_sw(T: FussTableau) -> SWWord:
    """Inverse of fill_tableau: S at the first-row entries, W elsewhere."""
    letters = [W_STEP] * T.size
    for t in T.first_row():
        letters[t - 1] = S_STEP
    return SWWord(T.frame(), "".join(letters))


def bold_set(T: FussTableau) -> frozenset[int]:
    """Walk redirection labels: foot+1 for sign +1 (incl. m+n), foot-1 for -1."""
    return frozenset(b + T.sign for b in T.bottom_row())


def en_from_tableau(T: FussTableau) -> ENWord:
    """EN rank-order word of the encoded preimage: N at foot +- 1."""
    letters = ["E"] * T.size
    for b in T.bottom_row():
        letters[b + T.sign - 1] = "N"
    return ENWord(T.frame(), "".join(letters))


def _walk_order(columns: tuple[tuple[int, ...], ...], sign: int) -> list[int]:
    """Closed walk on completed columns whose entries may be any distinct ints.

    Entries are compared through their ordinals in the sorted label universe
    (grid entries plus, for sign +1, one off-grid label just past the
    maximum); turns land at foot ordinal +- 1 and the bold slide moves the
    opposite way.  Raises NotSingleCycle unless every label is written
    exactly once and the walk closes back at the smallest label.
    """
    universe = sorted({e for c in columns for e in c})
    if sign > 0:
        universe.append(universe[-1] + 1)
    ordinal = {e: i + 1 for i, e in enumerate(universe)}
    size = len(universe) if sign > 0 else len(universe) - 1

    up = [0] * (len(universe) + 2)
    in_row1 = bytearray(len(universe) + 2)
    turn = [0] * (len(universe) + 2)
    bold = bytearray(len(universe) + 2)
    for col in columns:
        top = ordinal[col[0]]
        in_row1[top] = 1
        foot = ordinal[col[-1]]
        turn[top] = foot + sign
        bold[foot + sign] = 1
        for above, below in zip(col, col[1:]):
            up[ordinal[below]] = ordinal[above]

    order = []
    seen = bytearray(len(universe) + 2)
    cur = 1
    for _ in range(size):
        if seen[cur]:
            raise NotSingleCycle(f"label {universe[cur - 1]} visited twice")
        seen[cur] = 1
        order.append(universe[cur - 1])
        if in_row1[cur]:
            cur = turn[cur]
        else:
            r = size if sign > 0 and cur == size else up[cur]
            while bold[r]:
                r -= sign
            cur = r
    if cur != 1:
        raise NotSingleCycle("walk does not close at the smallest label")
    expected = set(universe[:size]) if sign < 0 else set(universe)
    if set(order) != expected:
        raise NotSingleCycle("walk misses labels")
    return order


def walk(T: FussTableau) -> WalkPermutation:
    """The single-cycle walk through the labels 1 .. m+n."""
    order = _walk_order(T.completed_columns(), T.sign)
    return WalkPermutation(order=tuple(order))


def reduced_walk(T: FussTableau) -> tuple[int, ...]:
    """Walk of the tableau with column 1 removed, original labels kept.

    Sign +1 with n >= 2 only; starts at the smallest remaining label and is
    the full walk with the column-1 segment spliced out.
    """
    if T.sign < 0:
        raise ValueError("reduced walk requires a sign +1 tableau")
    if T.n < 2:
        raise ValueError("reduced walk needs at least two columns")
    return tuple(_walk_order(T.columns[1:], +1))


def tableau_rank_labels(T: FussTableau) -> dict[int, int]:
    """Rank of each label along the walk: +m after a first-row label, -n after others.

    Strictly increasing in the label, which is exactly the statement that
    sweeping the reconstructed preimage returns the original path.
    """
    m, n = T.m, T.n
    row1 = set(T.first_row())
    order = walk(T).order
    rank = {1: 0}
    for a, b in zip(order, order[1:]):
        rank[b] = rank[a] + (m if a in row1 else -n)
    return rank


def _invert_steps(m: int, n: int, k: int, sign: int, steps: str) -> str:
    """Linear-time sweep inversion on raw arrays (hot path for benchmarks)."""
    size = m + n
    full = k + 1
    grid = size - 1 if sign > 0 else size + 1
    up = [0] * (grid + 2)
    in_row1 = bytearray(grid + 2)
    turn = [0] * (grid + 2)
    bold = bytearray(grid + 2)
    tops: list[int] = []
    feet: list[int] = []
    heights: list[int] = []
    active: deque[int] = deque()
    pop = active.popleft
    push = active.append
    for label in range(1, size):
        if steps[label - 1] == "N":
            in_row1[label] = 1
            tops.append(label)
            push(len(feet))
            feet.append(label)
            heights.append(1)
        else:
            if not active:
                raise PrematureStall(f"no active column for label {label}")
            c = pop()
            up[label] = feet[c]
            feet[c] = label
            h = heights[c] + 1
            heights[c] = h
            if h < full:
                push(c)
    if sign < 0:
        label = size
        while active:
            c = pop()
            up[label] = feet[c]
            feet[c] = label
            h = heights[c] + 1
            heights[c] = h
            if h < full:
                push(c)
            label += 1
    for t, b in zip(tops, feet):
        turn[t] = b + sign
        bold[b + sign] = 1

    out = [""] * size
    cur = 1
    for j in range(size):
        if in_row1[cur]:
            out[j] = "N"
            cur = turn[cur]
        else:
            out[j] = "E"
            r = size - 1 if sign > 0 and cur == size else up[cur]
            while bold[r]:
                r -= sign
            cur = r
    if cur != 1:
        raise NotSingleCycle("inversion walk does not close")
    return "".join(out)


def invert_fuss(path: DyckPath) -> DyckPath:
    """The sweep preimage of a Fuss path in O(m+n) time."""
    k, sign = _fuss_params(path.frame)
    word = _invert_steps(path.frame.m, path.frame.n, k, sign, path.steps)
    return DyckPath(path.frame, word)


def _first_row_word(k: int, n: int, t: tuple[int, ...]) -> SWWord:
    m = k * n + 1
    for j, tj in enumerate(t, start=1):
        upper = 1 + (j - 1) * (k + 1)
        if tj > upper or (j == 1 and tj != 1):
            raise RowConstraintViolated(j)
        if j > 1 and tj <= t[j - 2]:
            raise RowConstraintViolated(j)
    letters = [W_STEP] * (m + n)
    for tj in t:
        letters[tj - 1] = S_STEP
    return SWWord(make_frame(m, n), "".join(letters))


def tableau_from_first_row(k: int, n: int, t) -> FussTableau:
    """The unique sign +1 tableau with the given first row."""
    t = tuple(int(x) for x in t)
    if len(t) != n:
        raise ValueError(f"expected {n} first-row entries, got {len(t)}")
    return fill_tableau(_first_row_word(k, n, t))


def tableau_from_bottom_row(k: int, n: int, b) -> FussTableau:
    """The unique sign +1 tableau with the given bottom row.

    Built through the half-turn involution: the mirror's first row is the
    reversed complement of b, filled, then mirrored back.
    """
    b = tuple(int(x) for x in b)
    total = (k + 1) * n
    if len(b) != n:
        raise ValueError(f"expected {n} bottom-row entries, got {len(b)}")
    for j, bj in enumerate(b, start=1):
        if bj < j * (k + 1) or (j == n and bj != total):
            raise RowConstraintViolated(j)
        if j > 1 and bj <= b[j - 2]:
            raise RowConstraintViolated(j)
    mirror_top = tuple(total + 1 - bj for bj in reversed(b))
    mirror = tableau_from_first_row(k, n, mirror_top)
    from .reduction import psi

    return psi(mirror)
