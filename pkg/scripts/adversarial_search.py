"""Hunt for decompositions that break the repair loop or the greedy coloring.

Three sources: planted H_i cycles, the cycle-rich generator, and uniformly
random B-singular starting decompositions of random3d graphs.  Every run is
stabilized, audited and colored; any exception is printed with its seed.

    python3 scripts/adversarial_search.py --planted 5000 --random 2000
"""

from __future__ import annotations

import argparse
import random
import sys
from collections import Counter
from typing import Iterator

from bsec.coloring import color_decomposition, plan_triplex_order
from bsec.corpus import planted_cycles
from bsec.decomposition import Decomposition
from bsec.errors import InvariantBreach
from bsec.graph import cycle_rich, pad_to_cubic, random3d
from bsec.hi import analyze_all, audit_hi
from bsec.repair import audit_rules, stabilize
from bsec.verify import verify


def random_start(g, rng: random.Random) -> Decomposition:
    n_parts = g.delta_eff
    parts = [0] * g.n_edges
    for inc in g.b_inc:
        for e, p in zip(inc, rng.sample(range(n_parts), len(inc))):
            parts[e] = p
    return Decomposition(g, parts, n_parts)


def sources(args) -> Iterator[tuple[str, Decomposition]]:
    for s in range(args.planted):
        d = planted_cycles(args.seed + s, n_parts=args.parts, max_k=args.max_k)
        if d is not None:
            yield f"planted seed={args.seed + s}", d
    rng = random.Random(args.seed)
    for s in range(args.cycle_rich):
        delta = 3 + s % 6
        g = pad_to_cubic(cycle_rich(rng.randint(4, 60), delta, args.seed + s))[0]
        yield f"cycle-rich seed={args.seed + s} delta={delta}", random_start(g, rng)
    for s in range(args.random):
        delta = 3 + s % 6
        g = pad_to_cubic(random3d(rng.randint(2, 40), delta, args.seed + s))[0]
        yield f"random3d seed={args.seed + s} delta={delta}", random_start(g, rng)


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description="stress the repair loop and greedy coloring")
    ap.add_argument("--planted", type=int, default=2000)
    ap.add_argument("--cycle-rich", type=int, default=500)
    ap.add_argument("--random", type=int, default=1000)
    ap.add_argument("--parts", type=int, default=5)
    ap.add_argument("--max-k", type=int, default=7)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rules: Counter[str] = Counter()
    cases: Counter[str] = Counter()
    failures = runs = 0
    for label, d0 in sources(args):
        runs += 1
        try:
            d = stabilize(d0, on_move=lambda m, kb, ka: rules.update([m.rule]))
            rep = audit_rules(d)
            for s in analyze_all(d):
                rep.extend(audit_hi(s, d))
                cases.update(p.case for p in plan_triplex_order(d, s.part, s)[1].values())
            if not rep.ok:
                raise InvariantBreach("; ".join(x for x in rep.lines() if x.startswith("violation")))
            colors, _ = color_decomposition(d)
            if not verify(d.graph, colors).valid:
                raise InvariantBreach("coloring failed verification")
        except InvariantBreach as exc:
            failures += 1
            print(f"FAIL {label}: {type(exc).__name__}: {exc}")
    print(f"runs {runs} failures {failures}")
    print("moves by rule " + " ".join(f"{r}={rules[r]}" for r in sorted(rules)))
    print("cycle cases " + " ".join(f"{c}={n}" for c, n in sorted(cases.items())))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
