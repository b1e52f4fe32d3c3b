"""Command-line surface: compute, verify, enumerate, render, benchmark.

Exit codes: 0 success, 2 domain errors (non-coprime frame, path below the
diagonal, non-Fuss frame, ...), 1 I/O errors.  All JSON output is
stable-ordered so runs can be golden-file tested.  SWEEPKIT_SEED, when set,
overrides --seed.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import bench as bench_mod
from .core import (
    DyckPath,
    area,
    coarea,
    dinv,
    enumerate_paths,
    make_frame,
    parse_path,
    rank_sequence,
    ranks,
)
from .errors import SweepkitError
from .fuss import FussTableau, invert_fuss, path_tableau, walk
from .oracle import oracle_invert_sweep
from .qtcatalan import catalan_qt, catalan_qt_via_bounce, catalan_step, path_count
from .reduction import fiber_by_cutting, red
from .render import render_svg
from .sweep import (
    ENWord,
    SWWord,
    bipartite_invert,
    brute_invert_sweep,
    steps_to_sw,
    sw_word,
    en_word,
    sweep,
)


def _path_from_args(args) -> DyckPath:
    if args.m is None or args.n is None or args.word is None:
        raise SweepkitError("a path needs --m, --n and --word")
    frame = make_frame(args.m, args.n)
    kind = args.word_kind
    if kind == "ne":
        return parse_path(frame, args.word)
    if kind == "sw":
        return SWWord(frame, args.word.upper()).as_path()
    raise SweepkitError("an EN word alone does not determine a path")


def _tableau_from_args(args) -> FussTableau:
    if getattr(args, "tableau_json", None):
        return FussTableau.from_json(args.tableau_json)
    return path_tableau(_path_from_args(args))


def _path_json(path: DyckPath) -> dict:
    return {"m": path.frame.m, "n": path.frame.n, "steps": path.steps}


def cmd_stats(args) -> int:
    path = _path_from_args(args)
    frame = path.frame
    report = {
        "m": frame.m,
        "n": frame.n,
        "steps": path.steps,
        "fuss": None if frame.fuss is None else {"k": frame.fuss.k, "sign": frame.fuss.sign},
        "ranks": list(ranks(path)),
        "rank_sequence": list(rank_sequence(path)),
        "area": area(path),
        "coarea": coarea(path) if frame.fuss is not None else None,
        "dinv": dinv(path),
        "sw_word": sw_word(path).letters,
        "en_word": en_word(path).letters,
    }
    print(json.dumps(report))
    return 0


def cmd_sweep(args) -> int:
    print(json.dumps(_path_json(sweep(_path_from_args(args)))))
    return 0


def cmd_invert(args) -> int:
    if args.method == "bipartite":
        if args.m is None or args.n is None or args.word is None or args.en_word is None:
            raise SweepkitError("bipartite inversion needs --m, --n, --word and --en-word")
        if args.word_kind == "en":
            raise SweepkitError("pass the EN word through --en-word, not --word")
        frame = make_frame(args.m, args.n)
        letters = args.word.upper()
        sw = SWWord(frame, steps_to_sw(letters) if args.word_kind == "ne" else letters)
        en = ENWord(frame, args.en_word.upper())
        path, rs = bipartite_invert(sw, en)
        print(json.dumps({**_path_json(path), "rank_sequence": list(rs)}))
        return 0
    path = _path_from_args(args)
    if args.method == "fuss":
        preimage = invert_fuss(path)
    else:
        preimage = brute_invert_sweep(path)
    print(json.dumps(_path_json(preimage)))
    return 0


def cmd_tableau(args) -> int:
    T = _tableau_from_args(args)
    print(T.to_json())
    print(T.render_text(), file=sys.stderr)
    return 0


def cmd_red(args) -> int:
    if not args.tableau_json:
        raise SweepkitError("red needs --tableau-json")
    print(red(FussTableau.from_json(args.tableau_json)).to_json())
    return 0


def cmd_fiber(args) -> int:
    if not args.tableau_json:
        raise SweepkitError("fiber needs --tableau-json")
    T_reduced = FussTableau.from_json(args.tableau_json)
    members = []
    for D in fiber_by_cutting(T_reduced):
        T = path_tableau(D)
        members.append(
            {
                "tableau": json.loads(T.to_json()),
                "area": area(D),
                "bounce": area(invert_fuss(D)),
            }
        )
    print(json.dumps(members))
    return 0


def cmd_catalan(args) -> int:
    if args.via == "dinv-area":
        poly = catalan_qt(args.k, args.n)
    elif args.via == "area-bounce":
        poly = catalan_qt_via_bounce(args.k, args.n)
    else:
        poly = catalan_step(args.k, args.n)
    print(poly.to_json())
    print(poly.pretty(), file=sys.stderr)
    return 0


def cmd_count(args) -> int:
    print(path_count(make_frame(args.m, args.n)))
    return 0


def cmd_render(args) -> int:
    path = _path_from_args(args)
    svg = render_svg(path, labels=args.labels)
    try:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(svg)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(args.out)
    return 0


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    seed = int(os.environ.get("SWEEPKIT_SEED", args.seed))
    rows = bench_mod.time_inversions(args.k, sizes, args.reps, seed)
    print(bench_mod.rows_to_csv(rows))
    return 0


def cmd_verify(args) -> int:
    """Exhaustive property suites over every coprime frame up to --max-steps."""
    bound = args.max_steps
    frames = [
        make_frame(m, size - m)
        for size in range(2, bound + 1)
        for m in range(1, size)
        if math.gcd(m, size - m) == 1
    ]
    total_failures = 0

    failures = 0
    checked = 0
    for frame in frames:
        paths = list(enumerate_paths(frame))
        if len(paths) != path_count(frame):
            failures += 1
        images = set()
        for D in paths:
            images.add(sweep(D).steps)
            if dinv(D) != area(sweep(D)):
                failures += 1
        if len(images) != len(paths):
            failures += 1
        checked += len(paths)
    print(f"sweep bijection and dinv->area transport: {checked} paths "
          f"over {len(frames)} frames {'ok' if not failures else 'FAILED'}")
    total_failures += failures

    failures = 0
    fuss_checked = 0
    for frame in frames:
        if frame.fuss is None:
            continue
        for D in enumerate_paths(frame):
            if invert_fuss(D) != oracle_invert_sweep(D):
                failures += 1
            fuss_checked += 1
    print(f"linear inversion vs enumeration: {fuss_checked} paths "
          f"{'ok' if not failures else 'FAILED'}")
    total_failures += failures

    failures = 0
    tableau_checked = 0
    for frame in frames:
        if frame.fuss is None or frame.fuss.sign != +1:
            continue
        for D in enumerate_paths(frame):
            T = path_tableau(D)
            try:
                T.validate()
                walk(T)
            except Exception:
                failures += 1
            tableau_checked += 1
    print(f"tableau invariants and single-cycle walk: {tableau_checked} paths "
          f"{'ok' if not failures else 'FAILED'}")
    total_failures += failures

    if total_failures:
        print(f"{total_failures} failures", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sweepkit",
        description="Rational Dyck paths, the sweep map, and its Fuss-case inversion",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_path_args(p):
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--word")
        p.add_argument("--word-kind", choices=["ne", "sw", "en"], default="ne")

    p = sub.add_parser("stats", help="ranks, area, coarea, dinv, SW/EN words")
    add_path_args(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("sweep", help="sweep map image of a path")
    add_path_args(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("invert", help="sweep map preimage of a path")
    add_path_args(p)
    p.add_argument("--method", choices=["fuss", "bipartite", "brute"], default="fuss")
    p.add_argument("--en-word", help="EN word, required by --method bipartite")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("tableau", help="tableau encoding of a Fuss path")
    add_path_args(p)
    p.add_argument("--tableau-json")
    p.set_defaults(func=cmd_tableau)

    p = sub.add_parser("red", help="remove column 1 of a tableau and renumber")
    p.add_argument("--tableau-json", required=True)
    p.set_defaults(func=cmd_red)

    p = sub.add_parser("fiber", help="all paths whose tableau reduces to the given one")
    p.add_argument("--tableau-json", required=True)
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("catalan", help="higher q,t-Catalan polynomial")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--via", choices=["dinv-area", "area-bounce", "step"], default="dinv-area")
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("count", help="number of paths of a frame")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("render", help="render a path to SVG")
    add_path_args(p)
    p.add_argument("--out", required=True)
    p.add_argument("--labels", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bench", help="time the linear inversion on random paths")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--sizes", required=True, help="comma-separated frame heights n")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="run the exhaustive property suites")
    p.add_argument("--max-steps", type=int, default=12)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (SweepkitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
