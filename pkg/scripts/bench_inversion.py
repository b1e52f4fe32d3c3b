#!/usr/bin/env python3
"""Scaling experiment for the linear-time sweep inversion.

Times one inversion per random path across a doubling ladder of frame
heights and prints the CSV plus the observed per-doubling growth factors.

    python scripts/bench_inversion.py --k 2 --start 125000 --doublings 4 --reps 3
"""

import argparse
import os

from sweepkit.bench import rows_to_csv, time_inversions


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=2)
    parser.add_argument("--start", type=int, default=125_000)
    parser.add_argument("--doublings", type=int, default=4)
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    sizes = [args.start * 2**i for i in range(args.doublings)]
    seed = int(os.environ.get("SWEEPKIT_SEED", args.seed))
    rows = time_inversions(args.k, sizes, args.reps, seed)
    print(rows_to_csv(rows))
    means = [row["mean_ns"] for row in rows]
    for small, big, row in zip(means, means[1:], rows[1:]):
        print(f"# n={row['n']}: x{big / small:.2f} per doubling")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
