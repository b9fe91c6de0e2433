"""Command-line front end: ``lexorient {orient,verify,lemmas,bench,gen}``.

Exit codes: 0 success, 1 check failed (MISMATCH or a lemma failure),
2 parse/usage error, 3 infeasible graph, 4 oracle cap exceeded,
5 contract violation (e.g. a supplied orientation is not strongly connected).
"""

from __future__ import annotations

import argparse
import csv
import io
import random
import sys
import time
from contextlib import contextmanager

from .connectivity import is_strongly_connected
from .generators import Family, GenSpec, GenSpecError, generate, random_bridgeless
from .graph import (
    ContractError,
    GraphError,
    InfeasibleGraph,
    Orientation,
    format_graph,
    format_orientation,
    format_sequence_line,
    indegree_sequence,
    parse_graph,
    parse_orientation,
)
from .oracle import (
    DEFAULT_CAP,
    EnumerationCapExceeded,
    check_boundary_identity,
    check_lemma1,
    check_lemma3,
    oracle_min_lex,
)
from .reversal import path_reversal, sc_path_reversal, shortest_path

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_CAP = 4
EXIT_CONTRACT = 5

CSV_HEADER = ["n", "m", "seed", "algorithm", "steps", "millis", "max_indegree", "seq_head"]
SEQ_HEAD = 5
PROBE_PAIRS = 256


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


@contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as f:
            yield f


def _run(algorithm: str, g, seed: int, random_start: bool):
    if algorithm == "pr":
        return path_reversal(g, seed)
    return sc_path_reversal(g, seed, random_start=random_start)


def cmd_orient(args) -> int:
    g = parse_graph(_read(args.input))
    _, trace = _run(args.algorithm, g, args.seed, args.random_start)
    with _output(args.output) as out:
        out.write(trace.format() if args.trace else format_orientation(trace.final))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = parse_graph(_read(args.input))
    if g.m > args.oracle_cap:
        raise EnumerationCapExceeded(g.m, args.oracle_cap)
    final, _ = _run(args.algorithm, g, args.seed, args.random_start)
    got = indegree_sequence(final)
    oracle = oracle_min_lex(g, require_strong=args.algorithm == "scpr", cap=args.oracle_cap)
    match = got == oracle.best_sequence
    with _output(args.output) as out:
        out.write(f"algorithm={args.algorithm} seed={args.seed}\n")
        out.write(format_sequence_line(got))
        out.write(oracle.format() + "\n")
        out.write("MATCH\n" if match else "MISMATCH\n")
    return EXIT_OK if match else EXIT_FAILED


def _probe_pairs(n: int, rng: random.Random) -> list[tuple[int, int]]:
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    if len(pairs) > PROBE_PAIRS:
        pairs = rng.sample(pairs, PROBE_PAIRS)
    return pairs


def lemma_report(states: list[Orientation], seed: int) -> dict[str, list[int]]:
    """Run the three structural checks over ``states``; returns ``{name: [passed, failed]}``."""
    rng = random.Random(seed)
    tally = {"lemma1": [0, 0], "lemma3": [0, 0], "boundary": [0, 0]}
    for o in states:
        if not is_strongly_connected(o):
            raise ContractError("orientation is not strongly connected")
        for u, v in _probe_pairs(o.graph.n, rng):
            p = shortest_path(o, u, v)
            tally["lemma1"][0 if check_lemma1(o, p) else 1] += 1
        for v in range(o.graph.n):
            tally["lemma3"][0 if check_lemma3(o, v) else 1] += 1
            tally["boundary"][0 if check_boundary_identity(o, v) else 1] += 1
    return tally


def cmd_lemmas(args) -> int:
    g = parse_graph(_read(args.input))
    if args.orientation is not None:
        states = [parse_orientation(g, _read(args.orientation))]
    else:
        _, trace = sc_path_reversal(g, args.seed, random_start=args.random_start)
        states = trace.replay()
    tally = lemma_report(states, args.seed)
    with _output(args.output) as out:
        out.write(f"orientations={len(states)}\n")
        for name, (ok, bad) in tally.items():
            out.write(f"{name} pass={ok} fail={bad}\n")
    return EXIT_OK if all(bad == 0 for _, bad in tally.values()) else EXIT_FAILED


def bench_rows(sizes, density: float, seeds, algorithm: str, random_start: bool = False):
    for n in sizes:
        m = min(int(round(density * n)), n * (n - 1) // 2)
        for seed in seeds:
            start = time.perf_counter()
            try:
                g = random_bridgeless(n, m, seed)
                final, trace = _run(algorithm, g, seed, random_start)
            except (GraphError, GenSpecError, InfeasibleGraph) as exc:
                yield [n, m, seed, algorithm, "", "", "", f"error: {exc}"]
                continue
            millis = (time.perf_counter() - start) * 1000
            seq = indegree_sequence(final)
            head = ";".join(map(str, seq[:SEQ_HEAD]))
            yield [n, m, seed, algorithm, len(trace.steps), f"{millis:.1f}", seq[0] if seq else 0, head]


def cmd_bench(args) -> int:
    sizes = [int(x) for x in args.sizes.split(",")]
    seeds = range(args.seed, args.seed + args.repeats)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in bench_rows(sizes, args.density, seeds, args.algorithm, args.random_start):
        writer.writerow(row)
    with _output(args.output) as out:
        out.write(buf.getvalue())
    return EXIT_OK


def cmd_gen(args) -> int:
    g = generate(GenSpec(args.family, args.n, args.m, args.seed))
    with _output(args.output) as out:
        out.write(format_graph(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="edge-list file (default: stdin)")
    common.add_argument("--output", help="write here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--algorithm", choices=["pr", "scpr"], default="scpr")
    common.add_argument(
        "--random-start", action="store_true", help="scpr: start from a seeded random strong orientation"
    )

    parser = argparse.ArgumentParser(prog="lexorient", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orient", parents=[common], help="orient a graph")
    p.add_argument("--trace", action="store_true", help="emit every reversal step")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("verify", parents=[common], help="compare against the exhaustive oracle")
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--force", action="store_true", help=f"allow --oracle-cap above {DEFAULT_CAP}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lemmas", parents=[common], help="structural checks along a run")
    p.add_argument("--orientation", help="check this orientation document instead of a run ('-' for stdin)")
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("bench", parents=[common], help="timing sweep on random bridgeless graphs")
    p.add_argument("--sizes", default="50,100,200")
    p.add_argument("--density", type=float, default=3.0, help="edges per vertex")
    p.add_argument("--repeats", type=int, default=1, help="seeds per size, starting at --seed")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="emit a generated graph as an edge list")
    p.add_argument("--family", choices=[f.value for f in Family], default=Family.RANDOM_BRIDGELESS.value)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "oracle_cap", DEFAULT_CAP) > DEFAULT_CAP and not args.force:
        parser.error(f"--oracle-cap above {DEFAULT_CAP} needs --force")
    try:
        return args.func(args)
    except (GraphError, GenSpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InfeasibleGraph as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ContractError as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
