"""Rational (m,n)-Dyck paths over a coprime frame.

A path takes n North and m East unit steps from (0,0) to (m,n) and stays
weakly above the diagonal of slope n/m.  Every vertex gets an integer rank:
0 at the origin, +m after a North step, -n after an East step.  Coprimality
makes the m+n step-start ranks pairwise distinct and nonnegative, and they
are the backbone of everything else in this package: the sweep map reads
the steps back in increasing rank order.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import BelowDiagonal, NotCoprime, NotFuss, WrongStepCounts

NORTH = "N"
EAST = "E"


@dataclass(frozen=True)
class Fuss:
    """Classification m = k*n + sign with k >= 1 and sign in {+1, -1}."""

    k: int
    sign: int


@dataclass(frozen=True)
class Frame:
    """Coprime m x n lattice rectangle (m East steps wide, n North steps tall)."""

    m: int
    n: int
    fuss: Optional[Fuss] = None

    @property
    def size(self) -> int:
        return self.m + self.n

    def statistic_bound(self) -> int:
        """Shared upper bound (m-1)(n-1)/2 for area and dinv."""
        return (self.m - 1) * (self.n - 1) // 2


def make_frame(m: int, n: int) -> Frame:
    """Build a frame, checking coprimality and detecting the Fuss shape.

    When both m = kn+1 and m = kn-1 admit k >= 1 (possible only for
    n in {1, 2}), the +1 classification wins.
    """
    if m < 1 or n < 1:
        raise ValueError(f"frame sides must be positive, got ({m}, {n})")
    if math.gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) != 1")
    fuss = None
    if (m - 1) % n == 0 and (m - 1) // n >= 1:
        fuss = Fuss(k=(m - 1) // n, sign=+1)
    elif (m + 1) % n == 0 and (m + 1) // n >= 1:
        fuss = Fuss(k=(m + 1) // n, sign=-1)
    return Frame(m=m, n=n, fuss=fuss)


def _prefix_ranks(m: int, n: int, steps: str) -> list[int]:
    """Rank of the start vertex of each step (signed during validation)."""
    out = []
    r = 0
    for ch in steps:
        out.append(r)
        r += m if ch == NORTH else -n
    return out


@dataclass(frozen=True)
class DyckPath:
    """A validated (m,n)-Dyck path; ``steps`` is its word over {N, E}."""

    frame: Frame
    steps: str

    def __post_init__(self):
        m, n = self.frame.m, self.frame.n
        if len(self.steps) != m + n:
            raise WrongStepCounts(
                f"expected {m + n} steps, got {len(self.steps)}"
            )
        north = self.steps.count(NORTH)
        if north != n or len(self.steps) - north != m:
            raise WrongStepCounts(
                f"expected {n} N's and {m} E's in {self.steps!r}"
            )
        r = 0
        for i, ch in enumerate(self.steps):
            r += m if ch == NORTH else -n
            if r < 0:
                raise BelowDiagonal(i + 1)

    def to_json(self) -> str:
        return json.dumps({"m": self.frame.m, "n": self.frame.n, "steps": self.steps})


def parse_path(frame: Frame, word: str | Sequence[str]) -> DyckPath:
    """Validate a step word over {N, E} against the frame."""
    steps = "".join(word).upper()
    bad = set(steps) - {NORTH, EAST}
    if bad:
        raise ValueError(f"step word may only contain N and E, got {sorted(bad)}")
    return DyckPath(frame, steps)


def path_from_json(text: str) -> DyckPath:
    data = json.loads(text)
    return parse_path(make_frame(int(data["m"]), int(data["n"])), data["steps"])


def ranks(path: DyckPath) -> tuple[int, ...]:
    """Start-vertex rank of each step, in path order (first value 0)."""
    return tuple(_prefix_ranks(path.frame.m, path.frame.n, path.steps))


@dataclass(frozen=True)
class RankSequence:
    """The m+n step-start ranks sorted increasingly; always starts at 0."""

    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values or self.values[0] != 0:
            raise ValueError("rank sequence must start at 0")
        if any(a >= b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("rank sequence must be strictly increasing")

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def rank_sequence(path: DyckPath) -> RankSequence:
    return RankSequence(tuple(sorted(ranks(path))))


def _east_heights(path: DyckPath) -> list[int]:
    """Height of the East step in each column x = 0 .. m-1 (non-decreasing)."""
    heights = []
    y = 0
    for ch in path.steps:
        if ch == NORTH:
            y += 1
        else:
            heights.append(y)
    return heights


def area(path: DyckPath) -> int:
    """Full lattice cells strictly between the path and the diagonal.

    Cells cut by the diagonal are excluded; cell (x, y) lies weakly above
    the diagonal iff m*y >= n*(x+1).
    """
    m, n = path.frame.m, path.frame.n
    total = 0
    for x, h in enumerate(_east_heights(path)):
        lowest = -(-n * (x + 1) // m)  # ceil(n(x+1)/m)
        if h > lowest:
            total += h - lowest
    return total


def coarea(path: DyckPath) -> int:
    """Cells above the path: the complement of area within (m-1)(n-1)/2.

    For m = kn+1 this is the usual k*C(n,2) - area normalization.
    """
    if path.frame.fuss is None:
        raise NotFuss(f"coarea needs a Fuss frame, got ({path.frame.m}, {path.frame.n})")
    return path.frame.statistic_bound() - area(path)


def dinv(path: DyckPath) -> int:
    """Count cells above the path whose boundary ranks a, b satisfy 0 < a-b < m+n.

    For a cell in column x and row y (both 0-indexed), a is the rank of the
    left vertex of the East step in column x, and b is the rank of the bottom
    vertex of the North step crossing row y.  This cell rule is pinned by the
    identity dinv(D) = area(sweep(D)), checked exhaustively in the tests.
    """
    m, n = path.frame.m, path.frame.n
    east_rank = []  # a(x), by column
    north_rank = []  # b(y), by row
    r = 0
    for ch in path.steps:
        (north_rank if ch == NORTH else east_rank).append(r)
        r += m if ch == NORTH else -n
    size = m + n
    count = 0
    for x, h in enumerate(_east_heights(path)):
        a = east_rank[x]
        for y in range(h, n):
            diff = a - north_rank[y]
            if 0 < diff < size:
                count += 1
    return count


def rank_complement(path: DyckPath) -> DyckPath:
    """Cut at the highest-rank vertex as A|B and rotate BA by 180 degrees.

    An involution that preserves dinv.
    """
    rs = ranks(path)
    i = rs.index(max(rs))
    rotated = (path.steps[i:] + path.steps[:i])[::-1]
    return DyckPath(path.frame, rotated)


def enumerate_paths(frame: Frame, prefix: str = "") -> Iterator[DyckPath]:
    """Yield every path of the frame once, in lexicographic order with N < E.

    ``prefix`` restricts the stream to paths extending the given step word,
    which partitions the enumeration for parallel consumers.
    """
    m, n = frame.m, frame.n
    north_left = n - prefix.count(NORTH)
    east_left = m - (len(prefix) - prefix.count(NORTH))
    if north_left < 0 or east_left < 0:
        return
    r = 0
    for ch in prefix:
        r += m if ch == NORTH else -n
        if r < 0:
            return

    def walk(word: list[str], north: int, east: int, r: int) -> Iterator[DyckPath]:
        if north == 0 and east == 0:
            yield DyckPath(frame, "".join(word))
            return
        if north > 0:
            word.append(NORTH)
            yield from walk(word, north - 1, east, r + m)
            word.pop()
        if east > 0 and r - n >= 0:
            word.append(EAST)
            yield from walk(word, north, east - 1, r - n)
            word.pop()

    yield from walk(list(prefix), north_left, east_left, r)
