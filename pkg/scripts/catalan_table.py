#!/usr/bin/env python3
"""Tabulate higher q,t-Catalan polynomials and cross-check all three routes.

    python scripts/catalan_table.py --max-k 3 --max-n 5
"""

import argparse

from sweepkit import catalan_qt, catalan_qt_via_bounce, catalan_step, make_frame, path_count


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=5)
    args = parser.parse_args()

    for k in range(1, args.max_k + 1):
        for n in range(1, args.max_n + 1):
            poly = catalan_qt(k, n)
            agree = poly == catalan_qt_via_bounce(k, n)
            if n >= 2:
                agree = agree and poly == catalan_step(k, n)
            count = path_count(make_frame(k * n + 1, n))
            status = "ok" if agree and poly.evaluate(1, 1) == count else "MISMATCH"
            print(f"k={k} n={n} [{status}] ({count} paths)  {poly.pretty()}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
