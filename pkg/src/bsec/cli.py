"""Command-line entry point: ``bsec {gen,color,verify,oracle,audit,bench}``.

Exit codes: 0 success, 1 input error, 2 verification failure, 3 internal
invariant breach.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Sequence

from .coloring import strong_color
from .corpus import random_corpus
from .decomposition import initial_decomposition
from .errors import InputError, InvariantBreach
from .graph import (
    FAMILIES,
    GeneratorSpec,
    format_coloring,
    format_graph,
    generate,
    pad_to_cubic,
    parse_coloring,
    parse_graph,
)
from .hi import analyze_hi, audit_hi, build_hi
from .repair import audit_rules, stabilize
from .verify import exact_chi_s, verify

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_BREACH = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def _read_graph(path: str):
    return parse_graph(Path(path).read_text())


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_gen(args: argparse.Namespace) -> int:
    length = args.n if args.family in ("path", "even-cycle") else 0
    spec = GeneratorSpec(args.family, n=args.n, delta=args.delta, length=length, seed=args.seed)
    g = generate(spec)
    _write(args.out, format_graph(g, comment=f"family={args.family} n={args.n} delta={args.delta} seed={args.seed}"))
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    g = _read_graph(args.inp)
    res = strong_color(g, keep_traces=args.trace)
    _write(args.out, format_coloring(res.colors))
    print(f"colors {res.used_count} bound {res.bound}")
    if args.trace:
        for pc in res.traces or ():
            steps = " ".join(f"{e + 1}:{c + 1}" for e, c in pc.trace if e < g.n_edges)
            print(f"trace part {pc.part + 1} {steps}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.inp)
    colors = parse_coloring(Path(args.colors).read_text(), g.n_edges)
    verdict = verify(g, colors)
    print("\n".join(verdict.lines()))
    return EXIT_OK if verdict.valid else EXIT_INVALID


def cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph(args.inp)
    print(exact_chi_s(g, budget=args.budget).line())
    return EXIT_OK


def cmd_audit(args: argparse.Namespace) -> int:
    g = _read_graph(args.inp)
    padded, _ = pad_to_cubic(g)
    moves = []
    d = stabilize(initial_decomposition(padded), on_move=lambda m, kb, ka: moves.append(m))
    print(f"moves {len(moves)}")
    rep = audit_rules(d)
    for i in range(d.n_parts):
        h = build_hi(d, i)
        s = analyze_hi(h, d)
        rep.extend(audit_hi(s, d))
        sys.stdout.write(s.dump())
    print("\n".join(rep.lines()))
    if args.trace:
        sys.stdout.write(d.dump())
    return EXIT_OK if rep.ok else EXIT_BREACH


def cmd_bench(args: argparse.Namespace) -> int:
    deltas = [args.delta] if args.delta else list(range(3, 9))
    max_a = args.n or 60
    print(f"{'delta':>5} {'graphs':>6} {'max_colors':>10} {'bound':>5} {'ratio':>6} {'moves':>7} {'seconds':>8}")
    worst = 0.0
    for delta in deltas:
        t0 = time.perf_counter()
        max_used = moves = count = 0
        for _, g in random_corpus(delta, args.count, args.seed, max_a):
            res = strong_color(g)
            max_used = max(max_used, res.used_count)
            moves += res.moves
            count += 1
        ratio = max_used / (3 * delta)
        worst = max(worst, ratio)
        dt = time.perf_counter() - t0
        print(f"{delta:>5} {count:>6} {max_used:>10} {3 * delta:>5} {ratio:>6.3f} {moves:>7} {dt:>8.2f}")
    return EXIT_OK if worst <= 1.0 else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bsec", description="Strong edge-coloring of (3, delta)-bipartite graphs with 3*delta colors.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a generated graph")
    g.add_argument("--family", required=True, choices=FAMILIES)
    g.add_argument("--n", type=int, default=0, help="size parameter (|A|, |B| for complete-bipartite, or length)")
    g.add_argument("--delta", type=int, default=0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("color", help="strong-color a graph file")
    c.add_argument("--in", dest="inp", required=True)
    c.add_argument("--out")
    c.add_argument("--trace", action="store_true", help="print the per-part coloring order")
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify", help="check a coloring against a graph")
    v.add_argument("--in", dest="inp", required=True)
    v.add_argument("--colors", required=True)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exact strong chromatic index by branch and bound")
    o.add_argument("--in", dest="inp", required=True)
    o.add_argument("--budget", type=int, default=1_000_000, help="search node limit")
    o.set_defaults(func=cmd_oracle)

    a = sub.add_parser("audit", help="stabilize and print the rule and H_i structure report")
    a.add_argument("--in", dest="inp", required=True)
    a.add_argument("--trace", action="store_true", help="also dump the stable decomposition")
    a.set_defaults(func=cmd_audit)

    b = sub.add_parser("bench", help="run a seeded random3d corpus and summarize")
    b.add_argument("--delta", type=int, default=0, help="single delta (default: 3..8)")
    b.add_argument("--count", type=int, default=100)
    b.add_argument("--n", type=int, default=60, help="maximum |A|")
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantBreach as exc:
        print(f"internal invariant breach: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BREACH


if __name__ == "__main__":
    sys.exit(main())
