"""Seeded instance corpora used by ``bench``, the acceptance suite and scripts."""

from __future__ import annotations

import random
from typing import Iterator

import networkx as nx

from .decomposition import Decomposition
from .graph import BipartiteGraph, random3d


def corpus_params(delta: int, index: int, seed: int = 0, max_a: int = 60) -> tuple[int, int]:
    """(|A|, generator seed) of the ``index``-th random3d instance for ``delta``."""
    rng = random.Random(f"{seed}:{delta}:{index}")
    return rng.randint(2, max_a), rng.getrandbits(63)


def random_corpus(delta: int, count: int, seed: int = 0, max_a: int = 60) -> Iterator[tuple[str, BipartiteGraph]]:
    for index in range(count):
        n, s = corpus_params(delta, index, seed, max_a)
        yield f"random3d-d{delta}-n{n}-i{index}", random3d(n, delta, s)


def random_small(seed: int, max_edges: int = 12) -> BipartiteGraph:
    """A small random bipartite graph with A-degree at most 3 and at most ``max_edges`` edges."""
    rng = random.Random(seed)
    a_count = rng.randint(1, 6)
    b_count = rng.randint(1, 6)
    edges = []
    for a in range(a_count):
        for b in sorted(rng.sample(range(b_count), rng.randint(1, min(3, b_count)))):
            edges.append((a, b))
    rng.shuffle(edges)
    edges = edges[:max_edges]
    used_a = sorted({a for a, _ in edges})
    used_b = sorted({b for _, b in edges})
    ra = {a: i for i, a in enumerate(used_a)}
    rb = {b: i for i, b in enumerate(used_b)}
    return BipartiteGraph(len(used_a), len(used_b), tuple((ra[a], rb[b]) for a, b in edges))


def _to_nx(edges: frozenset[tuple[int, int]]) -> nx.Graph:
    h = nx.Graph()
    for a, b in edges:
        h.add_node(("a", a), side="a")
        h.add_node(("b", b), side="b")
        h.add_edge(("a", a), ("b", b))
    return h


def small_connected_graphs(max_edges: int) -> list[BipartiteGraph]:
    """Every connected bipartite graph with 1..max_edges edges and A-degree <= 3, one per isomorphism class.

    Isomorphism respects the A/B sides.  Grown edge by edge: each connected
    graph arises from a connected graph with one edge fewer by adding a
    pendant vertex or an edge between existing vertices.
    """
    out: list[BipartiteGraph] = []
    level: list[frozenset[tuple[int, int]]] = [frozenset({(0, 0)})]
    match = nx.algorithms.isomorphism.categorical_node_match("side", None)
    for m in range(1, max_edges + 1):
        for es in level:
            n_a = 1 + max(a for a, _ in es)
            n_b = 1 + max(b for _, b in es)
            out.append(BipartiteGraph(n_a, n_b, tuple(sorted(es))))
        if m == max_edges:
            break
        buckets: dict[str, list[tuple[frozenset, nx.Graph]]] = {}
        nxt: list[frozenset[tuple[int, int]]] = []
        for es in level:
            n_a = 1 + max(a for a, _ in es)
            n_b = 1 + max(b for _, b in es)
            deg = [0] * n_a
            for a, _ in es:
                deg[a] += 1
            cands = []
            for a in range(n_a):
                if deg[a] < 3:
                    cands.append(es | {(a, n_b)})
                    cands.extend(es | {(a, b)} for b in range(n_b) if (a, b) not in es)
            cands.extend(es | {(n_a, b)} for b in range(n_b))
            for c in cands:
                h = _to_nx(c)
                key = nx.weisfeiler_lehman_graph_hash(h, node_attr="side")
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other, node_match=match) for _, other in bucket):
                    continue
                bucket.append((c, h))
                nxt.append(c)
        level = nxt
    return out


def planted_cycles(seed: int, n_parts: int = 5, max_cycles: int = 3, max_k: int = 7) -> Decomposition | None:
    """A decomposition whose part 0 carries planted alternating cycles, or None if parts run out.

    Part 0 receives one or more cycles ``b_t a_t`` (lonely) / ``a_t b_{t+1}``
    (paired).  The off-cycle neighbours ``b'_t`` come from a small shared
    pool and each pool vertex may carry a part-0 triplex star, so every case
    of the cycle ordering shows up.
    """
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    parts: list[int] = []
    n_a = n_b = 0
    used: dict[int, set[int]] = {}

    def new_a() -> int:
        nonlocal n_a
        n_a += 1
        return n_a - 1

    def new_b() -> int:
        nonlocal n_b
        n_b += 1
        used[n_b - 1] = set()
        return n_b - 1

    def add(a: int, b: int, p: int) -> None:
        edges.append((a, b))
        parts.append(p)
        used[b].add(p)

    pool = [new_b() for _ in range(rng.randint(1, 4))]
    free_pool = [b for b in pool if rng.random() < 0.85]
    rng.shuffle(free_pool)
    while free_pool:
        take = min(len(free_pool), rng.choice((1, 1, 2, 3)))
        ends = free_pool[:take] + [new_b() for _ in range(3 - take)]
        del free_pool[:take]
        v = new_a()
        for b in ends:
            add(v, b, 0)

    for _ in range(rng.randint(1, max_cycles)):
        k = rng.randint(2, max_k)
        bs = [new_b() for _ in range(k)]
        as_ = [new_a() for _ in range(k)]
        for t in range(k):
            add(as_[t], bs[t], 0)
        for t in range(k):
            bp = rng.choice(pool) if rng.random() < 0.8 else new_b()
            nxt = bs[(t + 1) % k]
            free = [p for p in range(1, n_parts) if p not in used[nxt] and p not in used[bp]]
            if not free:
                return None
            j = rng.choice(free)
            add(as_[t], nxt, j)
            add(as_[t], bp, j)

    g = BipartiteGraph(n_a, n_b, tuple(edges))
    if g.delta_b > n_parts:
        return None
    return Decomposition(g, parts, n_parts)
