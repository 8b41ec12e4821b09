"""Independent validity check and an exact strong-chromatic-index oracle.

Nothing here looks at decompositions: conflicts are rebuilt from the edge
list alone, by grouping all edges within one step of each edge.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import IncompleteColoring
from .graph import BipartiteGraph


@dataclass
class Verdict:
    valid: bool
    violations: list[tuple[int, int, str]] = field(default_factory=list)
    colors_used: int = 0

    def lines(self) -> list[str]:
        if self.valid:
            return ["valid"]
        return [f"violation {e + 1} {f + 1} {why}" for e, f, why in self.violations]


def _conflicts(g: BipartiteGraph) -> dict[tuple[int, int], str]:
    by_vertex: dict[tuple[str, int], list[int]] = {}
    for idx, (a, b) in enumerate(g.edges):
        by_vertex.setdefault(("a", a), []).append(idx)
        by_vertex.setdefault(("b", b), []).append(idx)
    near: list[set[int]] = [set() for _ in g.edges]
    for idx, (a, b) in enumerate(g.edges):
        near[idx].update(by_vertex[("a", a)])
        near[idx].update(by_vertex[("b", b)])
    out: dict[tuple[int, int], str] = {}
    for idx, group in enumerate(near):
        for e in group:
            for f in group:
                if e < f:
                    adjacent = e in near[f]
                    if adjacent:
                        out[(e, f)] = "adjacent"
                    else:
                        out.setdefault((e, f), "shared-adjacent-edge")
    return out


def conflict_pairs(g: BipartiteGraph) -> list[tuple[int, int]]:
    """All unordered edge pairs at distance at most 2 in the line graph, sorted."""
    return sorted(_conflicts(g))


def verify(g: BipartiteGraph, colors: Sequence[int] | Mapping[int, int]) -> Verdict:
    if isinstance(colors, Mapping):
        missing = [e for e in range(g.n_edges) if e not in colors]
        col = [colors.get(e) for e in range(g.n_edges)]
    else:
        col = list(colors)
        missing = [e for e in range(g.n_edges) if e >= len(col) or col[e] is None]
    if missing:
        raise IncompleteColoring(f"edges without a color: {[e + 1 for e in missing[:10]]}")
    bad = [(e, f, why) for (e, f), why in sorted(_conflicts(g).items()) if col[e] == col[f]]
    return Verdict(not bad, bad, len(set(col[: g.n_edges])))


# ---------------------------------------------------------------------------
# exact oracle


@dataclass
class OracleResult:
    lower: int
    upper: int
    nodes_explored: int
    exact: bool
    coloring: list[int] | None = None

    @property
    def chi_s(self) -> int:
        return self.upper if self.exact else self.lower

    def line(self) -> str:
        if self.exact:
            return f"chi_s {self.upper} exact=true nodes={self.nodes_explored}"
        return f"chi_s {self.lower}..{self.upper} exact=false nodes={self.nodes_explored}"


def _greedy_clique(adj: list[set[int]]) -> list[int]:
    n = len(adj)
    best: list[int] = []
    for start in sorted(range(n), key=lambda v: (-len(adj[v]), v)):
        if len(adj[start]) + 1 <= len(best):
            break
        clique = [start]
        cand = set(adj[start])
        while cand:
            v = max(cand, key=lambda x: (len(adj[x] & cand), -x))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def exact_chi_s(g: BipartiteGraph, budget: int = 1_000_000, time_limit: float | None = None) -> OracleResult:
    """Minimum number of colors of a strong edge-coloring, by DSATUR branch and bound.

    Works on the conflict graph.  ``budget`` caps explored search nodes; if
    it (or ``time_limit`` seconds) runs out the result is a bracket.
    """
    n = g.n_edges
    if n == 0:
        return OracleResult(0, 0, 0, True, [])
    adj: list[set[int]] = [set() for _ in range(n)]
    for e, f in _conflicts(g):
        adj[e].add(f)
        adj[f].add(e)

    best = [0] * n
    for v in range(n):
        taken = {best[u] for u in adj[v] if u < v}
        best[v] = min(set(range(len(taken) + 1)) - taken)
    upper = max(best) + 1
    clique = _greedy_clique(adj)
    lower = len(clique)
    if lower == upper:
        return OracleResult(lower, upper, 0, True, best)

    color = [-1] * n
    # seed the search with the clique colored 0..q-1; any optimal coloring can be renamed to match
    for c, v in enumerate(clique):
        color[v] = c
    sat: list[dict[int, int]] = [dict() for _ in range(n)]
    for v in clique:
        for u in adj[v]:
            sat[u][color[v]] = sat[u].get(color[v], 0) + 1

    nodes = 0
    deadline = None if time_limit is None else time.monotonic() + time_limit
    out_of_budget = False

    def pick() -> int:
        bv, bk = -1, None
        for v in range(n):
            if color[v] < 0:
                k = (len(sat[v]), len(adj[v]), -v)
                if bk is None or k > bk:
                    bv, bk = v, k
        return bv

    def assign(v: int, c: int) -> None:
        color[v] = c
        for u in adj[v]:
            sat[u][c] = sat[u].get(c, 0) + 1

    def unassign(v: int, c: int) -> None:
        color[v] = -1
        for u in adj[v]:
            if sat[u][c] == 1:
                del sat[u][c]
            else:
                sat[u][c] -= 1

    def search(n_colored: int, used: int) -> None:
        nonlocal upper, best, nodes, out_of_budget
        if out_of_budget or upper == lower:
            return
        nodes += 1
        if nodes > budget or (deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline):
            out_of_budget = True
            return
        if n_colored == n:
            upper = used
            best = color[:]
            return
        v = pick()
        for c in range(min(used + 1, upper - 1)):
            if c in sat[v]:
                continue
            assign(v, c)
            search(n_colored + 1, max(used, c + 1))
            unassign(v, c)
            if out_of_budget or upper == lower:
                return

    search(len(clique), lower)
    exact = not out_of_budget
    return OracleResult(upper if exact else lower, upper, nodes, exact, best)
