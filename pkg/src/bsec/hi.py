"""Per-part auxiliary graphs H_i and their cycle/tree structure.

``H_i`` is the subgraph of G induced by the endpoints of the lonely edges
assigned to part ``i``.  On a stable decomposition every component of it
is either a tree with a single degree-1 A-vertex ``u`` (rooted at the
neighbour of ``u``) or contains exactly one cycle, on which lonely and
non-lonely edges alternate, with trees hanging from its B-vertices.

Vertex ids inside this module are unified integers: A-vertex ``x`` is
``x`` and B-vertex ``y`` is ``a_count + y``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import networkx as nx

from .decomposition import Decomposition, EdgeKind
from .errors import StructureViolation


@dataclass(frozen=True)
class HiGraph:
    part: int
    a_count: int
    vertices: frozenset[int]
    edges: tuple[int, ...]
    lonely: frozenset[int]
    adj: dict[int, tuple[tuple[int, int], ...]] = field(repr=False, compare=False)

    def is_a(self, v: int) -> bool:
        return v < self.a_count

    def degree(self, v: int) -> int:
        return len(self.adj.get(v, ()))


def build_hi(d: Decomposition, i: int) -> HiGraph:
    g = d.graph
    A = g.a_count
    verts: set[int] = set()
    for e in d.lonely_edges(i):
        a, b = g.edges[e]
        verts.add(a)
        verts.add(A + b)
    edges = []
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in verts}
    for v in sorted(verts):
        if v >= A:
            continue
        for e in g.a_inc[v]:
            w = A + g.edges[e][1]
            if w in verts:
                edges.append(e)
                adj[v].append((e, w))
                adj[w].append((e, v))
    lonely = frozenset(e for e in edges if d.kind[e] == EdgeKind.LONELY)
    return HiGraph(
        part=i,
        a_count=A,
        vertices=frozenset(verts),
        edges=tuple(sorted(edges)),
        lonely=lonely,
        adj={v: tuple(sorted(x)) for v, x in adj.items()},
    )


@dataclass(frozen=True)
class Cycle:
    """Alternating cycle ``b_0 a_0 b_1 a_1 ... b_{k-1} a_{k-1}``.

    ``lonely[t]`` is the edge ``b_t a_t``; ``links[t]`` is ``a_t b_{t+1}``;
    ``b_prime[t]`` is the third neighbour of ``a_t`` (off the cycle).
    Vertices are stored as plain side indices, not unified ids.
    """

    b: tuple[int, ...]
    a: tuple[int, ...]
    lonely: tuple[int, ...]
    links: tuple[int, ...]
    b_prime: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def length(self) -> int:
        return 2 * len(self.a)

    @property
    def odd(self) -> bool:
        return self.k % 2 == 1

    def rotated(self, s: int) -> "Cycle":
        def rot(x: tuple[int, ...]) -> tuple[int, ...]:
            return x[s:] + x[:s]

        return Cycle(rot(self.b), rot(self.a), rot(self.lonely), rot(self.links), rot(self.b_prime))


@dataclass
class Tree:
    root: int
    parent: dict[int, tuple[int, int]]
    order: list[int]
    edge_order: list[int]
    depth: dict[int, int]

    def children(self, v: int) -> list[int]:
        return [w for w, (p, _) in self.parent.items() if p == v]


@dataclass
class Component:
    id: int
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    cycle: Cycle | None
    trees: list[Tree]
    u: int | None = None  # unified id of the degree-1 A-vertex (acyclic only)


@dataclass
class HiStructure:
    part: int
    hi: HiGraph
    components: list[Component]

    @property
    def cycles(self) -> list[Cycle]:
        return [c.cycle for c in self.components if c.cycle is not None]

    def dump(self) -> str:
        out = []
        for c in self.components:
            cyc = str(c.cycle.length) if c.cycle else "none"
            out.append(f"hi {self.part + 1} component {c.id + 1} cycle {cyc} trees {len(c.trees)}\n")
        return "".join(out)


def components(h: HiGraph) -> list[tuple[list[int], list[int]]]:
    """Connected components as (sorted vertices, sorted edges), ordered by smallest edge."""
    seen: set[int] = set()
    out = []
    for v in sorted(h.vertices):
        if v in seen:
            continue
        seen.add(v)
        comp, es = [v], set()
        q = deque([v])
        while q:
            x = q.popleft()
            for e, w in h.adj[x]:
                es.add(e)
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    q.append(w)
        out.append((sorted(comp), sorted(es)))
    out.sort(key=lambda c: c[1][0] if c[1] else -1)
    return out


def _peel(h: HiGraph, verts: list[int]) -> set[int]:
    """Vertices left after repeatedly deleting degree-1 vertices."""
    deg = {v: h.degree(v) for v in verts}
    alive = set(verts)
    q = deque(v for v in verts if deg[v] <= 1)
    while q:
        v = q.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for _, w in h.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    q.append(w)
    return alive


def _bfs_tree(h: HiGraph, root: int, banned: frozenset[int]) -> Tree:
    parent: dict[int, tuple[int, int]] = {}
    depth = {root: 0}
    order = [root]
    edge_order: list[int] = []
    q = deque([root])
    while q:
        x = q.popleft()
        for e, w in h.adj[x]:
            if e in banned or w in depth:
                continue
            depth[w] = depth[x] + 1
            parent[w] = (x, e)
            order.append(w)
            edge_order.append(e)
            q.append(w)
    return Tree(root, parent, order, edge_order, depth)


def _walk_cycle(h: HiGraph, d: Decomposition, on_cycle: set[int]) -> Cycle:
    g = d.graph
    A = h.a_count
    b_verts = sorted(v for v in on_cycle if v >= A)
    if not b_verts:
        raise StructureViolation(f"H_{h.part + 1}: cycle without B-vertices")
    cyc_adj = {v: [(e, w) for e, w in h.adj[v] if w in on_cycle] for v in on_cycle}
    for v, nb in cyc_adj.items():
        if len(nb) != 2:
            raise StructureViolation(f"H_{h.part + 1}: cycle vertex {v} has {len(nb)} cycle edges")
    bs, as_, lon, links = [], [], [], []
    cur = b_verts[0]
    while True:
        lonely_here = [(e, w) for e, w in cyc_adj[cur] if e in h.lonely]
        if len(lonely_here) != 1:
            raise StructureViolation(f"H_{h.part + 1}: non-alternating cycle at B-vertex {cur - A + 1}")
        e, a = lonely_here[0]
        nxt = [(f, w) for f, w in cyc_adj[a] if f != e]
        f, b_next = nxt[0]
        if f in h.lonely:
            raise StructureViolation(f"H_{h.part + 1}: non-alternating cycle at A-vertex {a + 1}")
        bs.append(cur - A)
        as_.append(a)
        lon.append(e)
        links.append(f)
        cur = b_next
        if cur == b_verts[0]:
            break
        if len(bs) > len(on_cycle):
            raise StructureViolation(f"H_{h.part + 1}: cycle walk did not close")
    if 2 * len(bs) != len(on_cycle):
        raise StructureViolation(f"H_{h.part + 1}: cycle walk covered {2 * len(bs)} of {len(on_cycle)} vertices")
    k = len(bs)
    b_prime = []
    for t in range(k):
        rest = [y for y in g.a_nbrs[as_[t]] if y != bs[t] and y != bs[(t + 1) % k]]
        if len(rest) != 1:
            raise StructureViolation(f"H_{h.part + 1}: cycle A-vertex {as_[t] + 1} lacks a single off-cycle neighbour")
        b_prime.append(rest[0])
    return Cycle(tuple(bs), tuple(as_), tuple(lon), tuple(links), tuple(b_prime))


def analyze_hi(h: HiGraph, d: Decomposition) -> HiStructure:
    comps = []
    A = h.a_count
    for cid, (verts, edges) in enumerate(components(h)):
        rank = len(edges) - len(verts) + 1
        if rank > 1:
            raise StructureViolation(f"H_{h.part + 1}: component {cid + 1} has {rank} independent cycles")
        if rank == 1:
            cyc_verts = _peel(h, verts)
            cycle = _walk_cycle(h, d, cyc_verts)
            cyc_edges = frozenset(cycle.lonely + cycle.links)
            trees = []
            for v in sorted(cyc_verts):
                if any(e not in cyc_edges for e, _ in h.adj[v]):
                    trees.append(_bfs_tree(h, v, cyc_edges))
            comps.append(Component(cid, tuple(verts), tuple(edges), cycle, trees))
        else:
            us = [v for v in verts if v < A and h.degree(v) == 1]
            if len(us) != 1:
                raise StructureViolation(
                    f"H_{h.part + 1}: acyclic component {cid + 1} has {len(us)} degree-1 A-vertices"
                )
            u = us[0]
            r = h.adj[u][0][1]
            comps.append(Component(cid, tuple(verts), tuple(edges), None, [_bfs_tree(h, r, frozenset())], u=u))
    return HiStructure(h.part, h, comps)


def analyze_all(d: Decomposition) -> list[HiStructure]:
    return [analyze_hi(build_hi(d, i), d) for i in range(d.n_parts)]


# ---------------------------------------------------------------------------
# audit


@dataclass
class AuditReport:
    entries: list[tuple[str, bool, tuple]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.entries)

    def add(self, clause: str, witnesses: list[tuple]) -> None:
        if witnesses:
            self.entries.extend((clause, False, w) for w in witnesses)
        else:
            self.entries.append((clause, True, ()))

    def failures(self, clause: str | None = None) -> list[tuple]:
        return [w for c, passed, w in self.entries if not passed and (clause is None or c == clause)]

    def extend(self, other: "AuditReport") -> None:
        self.entries.extend(other.entries)

    def lines(self) -> list[str]:
        out = []
        for clause, passed, w in self.entries:
            out.append(f"ok {clause}" if passed else f"violation {clause} " + " ".join(map(str, w)))
        return out


def _vname(v: int, A: int) -> str:
    return f"a{v + 1}" if v < A else f"b{v - A + 1}"


def audit_hi(s: HiStructure | HiGraph, d: Decomposition) -> AuditReport:
    """Check the local H_i structure clauses, plus tree/cycle clauses when a structure is given."""
    h = s.hi if isinstance(s, HiStructure) else s
    A = h.a_count
    tag = f"H{h.part + 1}"
    rep = AuditReport()

    rep.add(f"{tag}:(1)", [(f"e{e + 1}",) for e in sorted(h.lonely) if d.part_of[e] != h.part])

    adj_lonely, nonlonely_at_a = [], []
    for v in sorted(h.vertices):
        lon = [e for e, _ in h.adj[v] if e in h.lonely]
        non = [e for e, _ in h.adj[v] if e not in h.lonely]
        if len(lon) > 1:
            adj_lonely.append(tuple(f"e{e + 1}" for e in lon))
        if v < A and len(non) > 1:
            nonlonely_at_a.append((_vname(v, A),) + tuple(f"e{e + 1}" for e in non))
    rep.add(f"{tag}:(2)", adj_lonely)
    rep.add(f"{tag}:(3)", nonlonely_at_a)

    if not isinstance(s, HiStructure):
        return rep

    cyc_deg, roots_a, alt, leaves, child = [], [], [], [], []
    for comp in s.components:
        if comp.cycle is not None:
            for a in comp.cycle.a:
                if h.degree(a) != 2:
                    cyc_deg.append((f"a{a + 1}", h.degree(a)))
        for t in comp.trees:
            if t.root < A:
                roots_a.append((_vname(t.root, A),))
            for v in t.order[1:]:
                p, e = t.parent[v]
                if p in t.parent and (e in h.lonely) == (t.parent[p][1] in h.lonely):
                    alt.append((_vname(v, A), f"e{e + 1}"))
            kids: dict[int, list[int]] = {}
            for v, (p, _) in t.parent.items():
                kids.setdefault(p, []).append(v)
            for v in t.order[1:]:
                if v not in kids and v < A and v != comp.u:
                    leaves.append((_vname(v, A),))
            for v in t.order:
                if v >= A or v == comp.u:
                    continue
                lon = [(e, w) for e, w in h.adj[v] if e in h.lonely]
                if not lon:
                    continue
                e, b = lon[0]
                if kids.get(v) != [b]:
                    child.append((_vname(v, A), f"e{e + 1}"))
    rep.add(f"{tag}:cycle-a-degree", cyc_deg)
    rep.add(f"{tag}:root-in-B", roots_a)
    rep.add(f"{tag}:tree-alternating", alt)
    rep.add(f"{tag}:leaves-in-B", leaves)
    rep.add(f"{tag}:only-child", child)
    return rep


# ---------------------------------------------------------------------------
# census of cycles whose length is 2 mod 4


def odd_cycle_count(h: HiGraph) -> int:
    """Number of cycles of length 2k with k odd in ``h`` (exact)."""
    total = 0
    for verts, edges in components(h):
        rank = len(edges) - len(verts) + 1
        if rank == 0:
            continue
        if rank == 1:
            on = _peel(h, verts)
            total += len(on) % 4 == 2
            continue
        sub = nx.Graph()
        for v in verts:
            for _, w in h.adj[v]:
                sub.add_edge(v, w)
        total += sum(1 for c in nx.simple_cycles(sub) if len(c) % 4 == 2)
    return total
