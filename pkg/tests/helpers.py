"""Hand-built decompositions and brute-force oracles shared by the tests."""

from __future__ import annotations

import itertools
from collections import Counter

import networkx as nx

from bsec.decomposition import Decomposition
from bsec.graph import BipartiteGraph


def build(spec: list[tuple[str, str, int]], n_parts: int | None = None) -> tuple[Decomposition, dict[str, int]]:
    """Decomposition from ``(a_name, b_name, part)`` triples; returns edge ids keyed ``"a0-b1"``."""
    a_ids: dict[str, int] = {}
    b_ids: dict[str, int] = {}
    edges, parts, names = [], [], {}
    for a, b, p in spec:
        ai = a_ids.setdefault(a, len(a_ids))
        bi = b_ids.setdefault(b, len(b_ids))
        names[f"{a}-{b}"] = len(edges)
        edges.append((ai, bi))
        parts.append(p)
    g = BipartiteGraph(len(a_ids), len(b_ids), tuple(edges))
    return Decomposition(g, parts, n_parts), names


def levels(d: Decomposition) -> list[int]:
    """Vertex type per A-vertex, straight from the part multiset."""
    out = []
    for inc in d.graph.a_inc:
        distinct = len({d.part_of[e] for e in inc})
        out.append({1: 1, 2: 2, 3: 3}[distinct] if len(inc) == 3 else 0)
    return out


def edge_kinds(d: Decomposition) -> list[str | None]:
    kinds: list[str | None] = [None] * d.graph.n_edges
    for inc in d.graph.a_inc:
        if len(inc) != 3:
            continue
        cnt = Counter(d.part_of[e] for e in inc)
        for e in inc:
            c = cnt[d.part_of[e]]
            if len(cnt) == 1:
                kinds[e] = "triplex"
            elif len(cnt) == 3:
                kinds[e] = "dispersed"
            else:
                kinds[e] = "paired" if c == 2 else "lonely"
    return kinds


def hi_nx(d: Decomposition, i: int) -> tuple[nx.Graph, set[int]]:
    """H_i as a networkx graph over ('a', x) / ('b', y) nodes, and its lonely edge ids."""
    kinds = edge_kinds(d)
    g = d.graph
    lonely = [e for e in range(g.n_edges) if kinds[e] == "lonely" and d.part_of[e] == i]
    nodes = set()
    for e in lonely:
        a, b = g.edges[e]
        nodes |= {("a", a), ("b", b)}
    h = nx.Graph()
    h.add_nodes_from(nodes)
    for e, (a, b) in enumerate(g.edges):
        if ("a", a) in nodes and ("b", b) in nodes:
            h.add_edge(("a", a), ("b", b), id=e, lonely=kinds[e] == "lonely")
    return h, set(lonely)


def brute_odd_cycles(d: Decomposition) -> int:
    return sum(
        1 for i in range(d.n_parts) for c in nx.simple_cycles(hi_nx(d, i)[0]) if len(c) % 4 == 2
    )


def brute_potential(d: Decomposition) -> tuple[int, int, int]:
    lv = levels(d)
    return lv.count(1), lv.count(2), brute_odd_cycles(d)


def conclusion_failures(d: Decomposition) -> list[str]:
    """Every repair-rule conclusion a stable decomposition must satisfy, checked from the definitions."""
    g = d.graph
    kinds = edge_kinds(d)
    part = d.part_of
    fails = []

    def part_edges_at_a(x: int, i: int) -> list[int]:
        return [e for e in g.a_inc[x] if part[e] == i]

    for e, (a, b) in enumerate(g.edges):
        i = part[e]
        for f in g.b_inc[b]:
            a1 = g.edges[f][0]
            if a1 == a:
                continue
            if kinds[e] in ("lonely", "dispersed"):
                for e2 in part_edges_at_a(a1, i):
                    if kinds[e2] != "lonely":
                        fails.append(f"R1 e{e} a{a1} e{e2}")
            if kinds[e] == "paired" and sum(1 for e2 in part_edges_at_a(a1, i) if kinds[e2] == "paired") == 2:
                fails.append(f"R3 e{e} a{a1}")

    for i in range(d.n_parts):
        h, _ = hi_nx(d, i)
        for v in h.nodes:
            if v[0] == "a":
                non = [w for w in h[v] if not h[v][w]["lonely"]]
                if len(non) > 1:
                    fails.append(f"R2 part{i} {v}")
        cycles = list(nx.simple_cycles(h))
        cyc_sets = [set(c) for c in cycles]
        for c, cs in zip(cycles, cyc_sets):
            n = len(c)
            for t, v in enumerate(c):
                if v[0] != "a":
                    continue
                x = v[1]
                next_b = c[(t + 1) % n]
                off = [y for y in g.a_nbrs[x] if ("b", y) not in cs]
                if len(off) == 1:
                    for e2 in g.b_inc[off[0]]:
                        if part[e2] == i and kinds[e2] != "triplex":
                            fails.append(f"R4 part{i} a{x} e{e2}")
                # consecutive A-vertices around the cycle
                other_a = c[(t + 2) % n]
                mid = next_b
                if (n // 2) % 2 == 1:
                    shared = set(g.a_nbrs[x]) & set(g.a_nbrs[other_a[1]]) - {mid[1]}
                    if shared:
                        fails.append(f"R6 part{i} a{x} a{other_a[1]}")
        for s1, s2 in itertools.combinations(cyc_sets, 2):
            both = s1 | s2
            for v in range(g.a_count):
                if len(part_edges_at_a(v, i)) != 3:
                    continue
                nb = g.a_nbrs[v]
                for v1, v2 in itertools.permutations(nb, 2):
                    if ("b", v1) in both or ("b", v2) in both:
                        continue
                    a1s = [x for x in g.b_nbrs[v1] if ("a", x) in s1]
                    a2s = [x for x in g.b_nbrs[v2] if ("a", x) in s2]
                    if a1s and a2s:
                        fails.append(f"R5 part{i} a{v}")
    return fails


def brute_chi_s(g: BipartiteGraph, limit: int = 12) -> int:
    """Smallest k for which some assignment of k colors is a strong coloring (enumeration)."""
    from bsec.graph import sees

    m = g.n_edges
    if m == 0:
        return 0
    pairs = [(e, f) for e in range(m) for f in range(e + 1, m) if sees(g, e, f)]
    for k in range(1, limit + 1):
        for col in itertools.product(range(k), repeat=m):
            if col and col[0] != 0:
                break
            if all(col[e] != col[f] for e, f in pairs):
                return k
    raise ValueError("limit too small")
