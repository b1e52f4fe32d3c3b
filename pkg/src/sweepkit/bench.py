"""Timing harness for the linear-time inversion.

Random paths are drawn uniformly by the cycle lemma: shuffle n North steps
into m+n positions, then take the unique cyclic rotation that stays above
the diagonal (start at the vertex of minimum prefix rank).
"""

from __future__ import annotations

import random
import time

from .core import DyckPath, Frame, make_frame
from .fuss import invert_fuss


def random_path(frame: Frame, rng: random.Random) -> DyckPath:
    """Uniform random path of the frame in O(m+n)."""
    m, n = frame.m, frame.n
    size = m + n
    north_at = set(rng.sample(range(size), n))
    word = ["N" if i in north_at else "E" for i in range(size)]
    r = 0
    best, best_at = 0, 0
    for i, ch in enumerate(word):
        if r < best:
            best, best_at = r, i
        r += m if ch == "N" else -n
    rotated = "".join(word[best_at:] + word[:best_at])
    return DyckPath(frame, rotated)


def time_inversions(k: int, sizes: list[int], reps: int, seed: int) -> list[dict]:
    """Mean wall time of one inversion per frame height, one row per size."""
    rows = []
    for n in sizes:
        frame = make_frame(k * n + 1, n)
        rng = random.Random(f"{seed}:{k}:{n}")
        total_ns = 0
        for _ in range(reps):
            path = random_path(frame, rng)
            t0 = time.perf_counter_ns()
            invert_fuss(path)
            t1 = time.perf_counter_ns()
            total_ns += t1 - t0
        rows.append(
            {
                "k": k,
                "n": n,
                "m": frame.m,
                "steps": frame.size,
                "mean_ns": total_ns // reps,
                "reps": reps,
            }
        )
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    lines = ["k,n,m,steps,mean_ns,reps"]
    for row in rows:
        lines.append(
            f"{row['k']},{row['n']},{row['m']},{row['steps']},{row['mean_ns']},{row['reps']}"
        )
    return "\n".join(lines)
