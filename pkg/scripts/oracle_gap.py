"""Distance between the pipeline's color count and the exact optimum on small graphs.

    python3 scripts/oracle_gap.py --max-edges 8 --random 500
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter

from bsec.coloring import strong_color
from bsec.corpus import random_small, small_connected_graphs
from bsec.verify import exact_chi_s


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description="compare strong_color against the exact oracle")
    ap.add_argument("--max-edges", type=int, default=8)
    ap.add_argument("--random", type=int, default=500)
    ap.add_argument("--random-edges", type=int, default=12)
    ap.add_argument("--budget", type=int, default=1_000_000)
    args = ap.parse_args(argv)

    graphs = small_connected_graphs(args.max_edges) + [random_small(s, args.random_edges) for s in range(args.random)]
    gaps: Counter[int] = Counter()
    slack: Counter[int] = Counter()
    bad = bracketed = 0
    for g in graphs:
        r = exact_chi_s(g, budget=args.budget)
        used = strong_color(g).used_count
        bracketed += not r.exact
        if r.exact:
            gaps[used - r.chi_s] += 1
        slack[3 * g.delta_eff - used] += 1
        bad += not (r.lower <= used <= 3 * g.delta_eff)
    print(f"graphs {len(graphs)}  bracketed {bracketed}  dominance failures {bad}")
    print("used - chi_s : " + "  ".join(f"{k}:{v}" for k, v in sorted(gaps.items())))
    print("3*delta_eff - used : " + "  ".join(f"{k}:{v}" for k, v in sorted(slack.items())))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
