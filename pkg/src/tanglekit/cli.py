"""Command-line client over the core package.

Exit codes: 0 ok, 1 usage error, 2 invalid input, 3 internal invariant
violation.  Commands that transform a puzzle write JSON either to --out or
to stdout, so they compose with shell pipelines.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import (
    InternalInvariantError,
    InvalidParameterError,
    TanglekitError,
)
from .graphs import bounds_report, epsilon
from .drawing import count_crossings
from .obfuscate import default_order, derandomized_obfuscate, local_search_swaps
from .puzzle import (
    FAMILIES,
    Puzzle,
    PuzzleMeta,
    decode_puzzle,
    encode_puzzle,
    parse_solution,
    run_pipeline,
    verify_solution,
)
from .untangle import untangle

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID_INPUT = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_params(items: list[str]) -> dict[str, int]:
    params: dict[str, int] = {}
    for item in items:
        if "=" not in item:
            raise InvalidParameterError(f"parameter {item!r} is not of the form key=value")
        key, _, value = item.partition("=")
        try:
            params[key] = int(value)
        except ValueError:
            raise InvalidParameterError(f"parameter {key!r} must be an integer") from None
    return params


def _read_puzzle(path: str) -> Puzzle:
    return decode_puzzle(Path(path).read_bytes())


def _emit(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.write(data.decode())


def _print_json(obj: object) -> None:
    print(json.dumps(obj, indent=2))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tanglekit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a puzzle for a graph family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--out", default=None)

    p = sub.add_parser("obfuscate", help="re-obfuscate the graph of a puzzle file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--restarts", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-local-search", action="store_true")

    p = sub.add_parser("count", help="print the exact crossing count of a puzzle drawing")
    p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("epsilon", help="print the disjoint-edge-pair count of the graph")
    p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("bounds", help="print the shift/crossing bound report")
    p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("untangle", help="produce a crossing-free drawing")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument(
        "--method", default="auto", choices=("auto", "mis-shrink", "apex", "reference")
    )
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="verify a solution file against a puzzle")
    p.add_argument("--puzzle", required=True)
    p.add_argument("--solution", required=True)

    p = sub.add_parser("serve", help="serve puzzles over HTTP")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--dir", dest="puzzle_dir", required=True)

    return parser


def _cmd_gen(args: argparse.Namespace) -> int:
    puzzle = run_pipeline(
        args.family, _parse_params(args.params), args.seed, restarts=args.restarts
    )
    _emit(encode_puzzle(puzzle), args.out)
    return EXIT_OK


def _cmd_obfuscate(args: argparse.Namespace) -> int:
    import random

    puzzle = _read_puzzle(args.infile)
    g = puzzle.graph
    best = None
    best_count = -1
    for r in range(max(args.restarts, 1)):
        if r == 0:
            order = default_order(g)
        else:
            rng = random.Random(args.seed * 1_000_003 + r)
            order = list(range(g.n))
            rng.shuffle(order)
        cand = derandomized_obfuscate(g, order)
        if not args.no_local_search:
            cand = local_search_swaps(cand)
        cnt = count_crossings(cand).count
        if cnt > best_count:
            best_count = cnt
            best = cand
    assert best is not None
    meta = PuzzleMeta(
        epsilon=puzzle.meta.epsilon,
        crossings=best_count,
        nu=puzzle.meta.nu,
        shift_lower=puzzle.meta.shift_lower,
        shift_upper=puzzle.meta.shift_upper,
        family=puzzle.meta.family,
        seed=args.seed,
    )
    _emit(
        encode_puzzle(Puzzle(id=puzzle.id, graph=g, drawing=best, meta=meta)),
        None,
    )
    return EXIT_OK


def _cmd_count(args: argparse.Namespace) -> int:
    puzzle = _read_puzzle(args.infile)
    report = count_crossings(puzzle.drawing)
    _print_json({"crossings": report.count, "pairs": [list(p) for p in report.pairs]})
    return EXIT_OK


def _cmd_epsilon(args: argparse.Namespace) -> int:
    puzzle = _read_puzzle(args.infile)
    _print_json({"epsilon": epsilon(puzzle.graph)})
    return EXIT_OK


def _cmd_bounds(args: argparse.Namespace) -> int:
    puzzle = _read_puzzle(args.infile)
    report = bounds_report(puzzle.graph)
    _print_json(
        {
            "epsilon": report.epsilon,
            "nu": report.nu,
            "shift_lower": report.shift_lower,
            "shift_upper": report.shift_upper,
            "obf_upper": report.obf_upper,
            "flags": report.flags,
        }
    )
    return EXIT_OK


def _cmd_untangle(args: argparse.Namespace) -> int:
    puzzle = _read_puzzle(args.infile)
    result = untangle(puzzle.drawing, args.method)
    meta = PuzzleMeta(
        epsilon=puzzle.meta.epsilon,
        crossings=0,
        nu=puzzle.meta.nu,
        shift_lower=puzzle.meta.shift_lower,
        shift_upper=puzzle.meta.shift_upper,
        family=puzzle.meta.family,
        seed=puzzle.meta.seed,
    )
    out_puzzle = Puzzle(
        id=puzzle.id, graph=puzzle.graph, drawing=result.final, meta=meta
    )
    if args.out:
        _emit(encode_puzzle(out_puzzle), args.out)
        _print_json(
            {"method": result.method, "shifts": result.shifts, "out": args.out}
        )
    else:
        _emit(encode_puzzle(out_puzzle), None)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    puzzle = _read_puzzle(args.puzzle)
    solution = parse_solution(Path(args.solution).read_bytes())
    if solution.puzzle_id is not None and solution.puzzle_id != puzzle.id:
        raise InvalidParameterError(
            f"solution is for puzzle {solution.puzzle_id!r}, not {puzzle.id!r}"
        )
    result = verify_solution(puzzle, solution)
    _print_json(
        {
            "crossings": result.crossings,
            "crossing_free": result.crossing_free,
            "shifts_used": result.shifts_used,
        }
    )
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(args.puzzle_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "obfuscate": _cmd_obfuscate,
    "count": _cmd_count,
    "epsilon": _cmd_epsilon,
    "bounds": _cmd_bounds,
    "untangle": _cmd_untangle,
    "verify": _cmd_verify,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except InvalidParameterError as exc:
        print(f"tanglekit: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInvariantError as exc:
        print(f"tanglekit: internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (TanglekitError, OSError) as exc:
        print(f"tanglekit: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
