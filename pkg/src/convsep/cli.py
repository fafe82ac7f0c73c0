"""Command-line entry point: ``convsep separate|subdivide|verify|bench``.

Exit codes: 0 success (never separated / path found / oracle agreement),
1 input or I/O error, 2 separated, 3 depth exhausted, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import run_bench
from .errors import ConvsepError, ParseError
from .formats import looks_like_scene, parse_scene, parse_stream
from .geometry import Anchor, Point
from .index import GridNeighborFinder, NaiveNeighborFinder, SeparationIndex
from .oracle import random_box_stream
from .subdivision import Outcome, SubdivisionEngine
from .svg import render_engine, render_stream, write_svg
from .verify import verify_engine, verify_stream

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_SEPARATED = 2
EXIT_EXHAUSTED = 3
EXIT_MISMATCH = 4


def _finder(args):
    if args.finder == "grid":
        return GridNeighborFinder(args.cell_size)
    return NaiveNeighborFinder()


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _warn(warnings) -> None:
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)


def run_separate(args) -> int:
    stream = parse_stream(_read(args.stream))
    _warn(stream.warnings)
    index = SeparationIndex(stream.anchor, _finder(args))
    for body in stream.bodies:
        print(index.insert(body).line())
    if args.svg:
        write_svg(render_stream(stream.anchor, stream.bodies, index.separated_at), args.svg)
    if index.is_separated():
        print(f"separated_at={index.separated_at + 1}")
        return EXIT_SEPARATED
    return EXIT_OK


def _engine_from_scene(args) -> SubdivisionEngine:
    scene = parse_scene(_read(args.scene))
    _warn(scene.warnings)
    depth = scene.max_depth if args.max_depth is None else args.max_depth
    return SubdivisionEngine(scene.anchor, scene.oracle(), depth)


def run_subdivide(args) -> int:
    engine = _engine_from_scene(args)
    outcome = engine.run()
    print(engine.summary())
    if args.stats:
        s = engine.stats
        print(
            f"uf_ops={s.uf_ops} green_uf_ops={s.green_uf_ops} red_uf_ops={s.red_uf_ops} "
            f"uf_hops={s.uf_hops} max_neighbors={s.max_neighbors}"
        )
    if args.svg:
        write_svg(render_engine(engine), args.svg)
    return {
        Outcome.PATH_FOUND: EXIT_OK,
        Outcome.SEPARATED: EXIT_SEPARATED,
        Outcome.DEPTH_EXHAUSTED: EXIT_EXHAUSTED,
    }[outcome]


def run_verify(args) -> int:
    if args.random:
        for i in range(args.random):
            bodies = random_box_stream(args.seed + i, args.count)
            mismatch = verify_stream(
                Anchor(Point(0, 0), Point(10, 0)), bodies, inject_fault=args.inject_fault
            )
            if mismatch:
                print(f"seed {args.seed + i}: {mismatch}")
                return EXIT_MISMATCH
        print(f"agreement on {args.random} random streams")
        return EXIT_OK
    if args.path is None:
        raise ParseError(1, "verify needs a stream or scene path, or --random")
    text = _read(args.path)
    if args.scene or looks_like_scene(text):
        args.scene = args.path
        engine = _engine_from_scene(args)
        mismatch = verify_engine(engine)
        label = engine.summary()
    else:
        stream = parse_stream(text)
        _warn(stream.warnings)
        mismatch = verify_stream(
            stream.anchor, stream.bodies, _finder(args), inject_fault=args.inject_fault
        )
        label = f"{len(stream.bodies)} insertions"
    if mismatch:
        print(f"mismatch at {mismatch}")
        return EXIT_MISMATCH
    print(f"agreement: {label}")
    return EXIT_OK


def run_bench_cmd(args) -> int:
    results = []
    for n in args.sizes:
        res = run_bench(n, seed=args.seed, extent=args.extent, resolution=args.resolution)
        results.append(res)
        print(res.line())
    for prev, cur in zip(results, results[1:]):
        print(f"ratio n={cur.n}/n={prev.n} time={cur.seconds / prev.seconds:.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convsep", description="Incremental s-t separation by convex bodies."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def finder_opts(p):
        p.add_argument("--finder", choices=("naive", "grid"), default="naive")
        p.add_argument("--cell-size", default="1", help="grid cell size (rational)")

    p = sub.add_parser("separate", help="insert a body stream and report separation")
    p.add_argument("stream")
    finder_opts(p)
    p.add_argument("--svg", help="write an SVG snapshot")
    p.set_defaults(func=run_separate)

    p = sub.add_parser("subdivide", help="run the quadtree subdivision on a scene")
    p.add_argument("scene")
    p.add_argument("--max-depth", type=int)
    p.add_argument("--svg", help="write an SVG snapshot of the final state")
    p.add_argument("--stats", action="store_true", help="print union-find statistics")
    p.set_defaults(func=run_subdivide)

    p = sub.add_parser("verify", help="cross-check against the flood-fill oracle")
    p.add_argument("path", nargs="?")
    p.add_argument("--scene", action="store_true", help="treat the file as a scene")
    p.add_argument("--max-depth", type=int)
    p.add_argument("--random", type=int, default=0, metavar="N", help="check N random streams")
    p.add_argument("--count", type=int, default=30, help="boxes per random stream")
    p.add_argument("--seed", type=int, default=0)
    finder_opts(p)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=run_verify)

    p = sub.add_parser("bench", help="time random unit-box streams with the grid finder")
    p.add_argument("--sizes", type=int, nargs="+", default=[100000, 200000])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--extent", type=int, default=500)
    p.add_argument("--resolution", type=int, default=8)
    p.set_defaults(func=run_bench_cmd)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConvsepError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
