"""Bipartite graphs with A-side degree at most 3.

Vertices are 0-based on each side, edges are 0-based positions in the edge
list. The text formats on disk are 1-based; conversion happens only in
:func:`parse_graph`, :func:`format_graph` and the coloring readers/writers.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DegreeBoundViolated,
    DuplicateEdge,
    IncompleteColoring,
    InvalidParameters,
    MalformedHeader,
    UnknownVertex,
)

MAX_A_DEGREE = 3

Edge = tuple[int, int]


@dataclass(frozen=True)
class BipartiteGraph:
    a_count: int
    b_count: int
    edges: tuple[Edge, ...]
    a_inc: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    b_inc: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        a_inc: list[list[int]] = [[] for _ in range(self.a_count)]
        b_inc: list[list[int]] = [[] for _ in range(self.b_count)]
        seen: set[Edge] = set()
        for idx, (a, b) in enumerate(edges):
            if not (0 <= a < self.a_count and 0 <= b < self.b_count):
                raise UnknownVertex(f"edge {idx + 1} ({a + 1}, {b + 1}) references a missing vertex")
            if (a, b) in seen:
                raise DuplicateEdge(f"edge {idx + 1} ({a + 1}, {b + 1}) repeated")
            seen.add((a, b))
            a_inc[a].append(idx)
            b_inc[b].append(idx)
        object.__setattr__(self, "a_inc", tuple(map(tuple, a_inc)))
        object.__setattr__(self, "b_inc", tuple(map(tuple, b_inc)))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def delta_a(self) -> int:
        return max((len(x) for x in self.a_inc), default=0)

    @property
    def delta_b(self) -> int:
        return max((len(x) for x in self.b_inc), default=0)

    @property
    def delta_eff(self) -> int:
        """Number of parts used by the decomposition: ``max(3, delta_b)``."""
        return max(3, self.delta_b)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def a_nbrs(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.edges[e][1] for e in inc) for inc in self.a_inc)

    @cached_property
    def b_nbrs(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.edges[e][0] for e in inc) for inc in self.b_inc)

    def edge_index(self, a: int, b: int) -> int | None:
        for e in self.a_inc[a]:
            if self.edges[e][1] == b:
                return e
        return None

    @cached_property
    def seen_by(self) -> tuple[frozenset[int], ...]:
        """For every edge, the set of other edges it sees."""
        out = []
        for e, (a, b) in enumerate(self.edges):
            s: set[int] = set()
            for y in self.a_nbrs[a]:
                s.update(self.b_inc[y])
            for x in self.b_nbrs[b]:
                s.update(self.a_inc[x])
            s.discard(e)
            out.append(frozenset(s))
        return tuple(out)

    def restrict(self, n_edges: int) -> "BipartiteGraph":
        """Keep the first ``n_edges`` edges, drop B-vertices past the original count."""
        kept = self.edges[:n_edges]
        b_count = max((b for _, b in kept), default=-1) + 1
        return BipartiteGraph(self.a_count, b_count, kept)


def sees(g: BipartiteGraph, e: int, f: int) -> bool:
    """True iff edges ``e`` and ``f`` are adjacent or joined by a third edge."""
    a, b = g.edges[e]
    x, y = g.edges[f]
    if a == x or b == y:
        return True
    return (a, y) in g.edge_set or (x, b) in g.edge_set


@dataclass(frozen=True)
class PadRecord:
    added_b_vertices: tuple[int, ...]
    added_edges: tuple[int, ...]
    original_edge_count: int
    original_b_count: int


def pad_to_cubic(g: BipartiteGraph) -> tuple[BipartiteGraph, PadRecord]:
    """Raise every A-vertex to degree 3 by hanging fresh degree-1 B-vertices on it."""
    if g.delta_a > MAX_A_DEGREE:
        raise DegreeBoundViolated(f"A-side degree {g.delta_a} exceeds {MAX_A_DEGREE}")
    edges = list(g.edges)
    b_count = g.b_count
    new_b: list[int] = []
    new_e: list[int] = []
    for a in range(g.a_count):
        for _ in range(MAX_A_DEGREE - len(g.a_inc[a])):
            new_b.append(b_count)
            new_e.append(len(edges))
            edges.append((a, b_count))
            b_count += 1
    padded = BipartiteGraph(g.a_count, b_count, tuple(edges)) if new_e else g
    return padded, PadRecord(tuple(new_b), tuple(new_e), g.n_edges, g.b_count)


def unpad(g: BipartiteGraph, rec: PadRecord) -> BipartiteGraph:
    return BipartiteGraph(g.a_count, rec.original_b_count, g.edges[: rec.original_edge_count])


# ---------------------------------------------------------------------------
# text formats


def _fail(exc: type[Exception], lineno: int, line: str, why: str) -> Exception:
    return exc(f"line {lineno}: {why}: {line.strip()!r}")


def parse_graph(text: str | Iterable[str]) -> BipartiteGraph:
    lines = text.splitlines() if isinstance(text, str) else list(text)
    header: tuple[int, int, int] | None = None
    header_line = 0
    edges: list[Edge] = []
    seen: set[Edge] = set()
    a_deg: list[int] = []
    for lineno, line in enumerate(lines, start=1):
        tok = line.split()
        if not tok or tok[0].startswith("#"):
            continue
        if tok[0] == "p":
            if header is not None:
                raise _fail(MalformedHeader, lineno, line, "second header")
            if len(tok) != 5 or tok[1] != "bsec":
                raise _fail(MalformedHeader, lineno, line, "expected 'p bsec <a> <b> <m>'")
            try:
                header = (int(tok[2]), int(tok[3]), int(tok[4]))
            except ValueError:
                raise _fail(MalformedHeader, lineno, line, "non-integer count") from None
            if min(header) < 0:
                raise _fail(MalformedHeader, lineno, line, "negative count")
            header_line = lineno
            a_deg = [0] * header[0]
        elif tok[0] == "e":
            if header is None:
                raise _fail(MalformedHeader, lineno, line, "edge before header")
            if len(tok) != 3:
                raise _fail(MalformedHeader, lineno, line, "expected 'e <a> <b>'")
            try:
                a, b = int(tok[1]), int(tok[2])
            except ValueError:
                raise _fail(MalformedHeader, lineno, line, "non-integer vertex") from None
            if not (1 <= a <= header[0] and 1 <= b <= header[1]):
                raise _fail(UnknownVertex, lineno, line, "vertex out of range")
            key = (a - 1, b - 1)
            if key in seen:
                raise _fail(DuplicateEdge, lineno, line, "duplicate edge")
            seen.add(key)
            a_deg[a - 1] += 1
            if a_deg[a - 1] > MAX_A_DEGREE:
                raise _fail(DegreeBoundViolated, lineno, line, f"A-vertex {a} exceeds degree {MAX_A_DEGREE}")
            edges.append(key)
        else:
            raise _fail(MalformedHeader, lineno, line, "unknown line type")
    if header is None:
        raise MalformedHeader("missing 'p bsec' header")
    if len(edges) != header[2]:
        raise MalformedHeader(f"line {header_line}: header announces {header[2]} edges, found {len(edges)}")
    return BipartiteGraph(header[0], header[1], tuple(edges))


def format_graph(g: BipartiteGraph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"p bsec {g.a_count} {g.b_count} {g.n_edges}")
    out.extend(f"e {a + 1} {b + 1}" for a, b in g.edges)
    return "\n".join(out) + "\n"


def format_coloring(colors: Sequence[int]) -> str:
    k = len(set(colors))
    out = [f"s colors {k}"]
    out.extend(f"c {e + 1} {c + 1}" for e, c in enumerate(colors))
    return "\n".join(out) + "\n"


def parse_coloring(text: str, n_edges: int) -> list[int]:
    colors: list[int | None] = [None] * n_edges
    for lineno, line in enumerate(text.splitlines(), start=1):
        tok = line.split()
        if not tok or tok[0].startswith("#") or tok[0] == "s":
            continue
        if tok[0] != "c" or len(tok) != 3:
            raise _fail(MalformedHeader, lineno, line, "expected 'c <edge> <color>'")
        try:
            e, c = int(tok[1]), int(tok[2])
        except ValueError:
            raise _fail(MalformedHeader, lineno, line, "non-integer field") from None
        if not 1 <= e <= n_edges:
            raise _fail(UnknownVertex, lineno, line, "edge index out of range")
        if c < 1:
            raise _fail(MalformedHeader, lineno, line, "colors are 1-based")
        colors[e - 1] = c - 1
    missing = [i + 1 for i, c in enumerate(colors) if c is None]
    if missing:
        raise IncompleteColoring(f"no color for edges {missing[:10]}{'...' if len(missing) > 10 else ''}")
    return colors  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# generators

FAMILIES = ("k3n", "complete-bipartite", "random3d", "path", "even-cycle", "cycle-rich")


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters for :func:`generate`.

    ``n`` is the A-side size for ``k3n``, ``random3d`` and ``cycle-rich``,
    and the B-side size for ``complete-bipartite`` (whose A side has
    ``delta`` vertices).  ``length`` is the edge count for ``path`` and
    ``even-cycle``.  ``b_count`` optionally fixes the B side of ``random3d``.
    """

    family: str
    n: int = 0
    delta: int = 0
    length: int = 0
    seed: int = 0
    b_count: int | None = None


def generate(spec: GeneratorSpec) -> BipartiteGraph:
    fam = spec.family
    if fam == "k3n":
        _need(spec.n >= 1, "k3n needs n >= 1")
        return complete_bipartite(spec.n, 3)
    if fam == "complete-bipartite":
        _need(spec.delta >= 1 and 1 <= spec.n <= MAX_A_DEGREE, "complete-bipartite needs delta >= 1 and 1 <= n <= 3")
        return complete_bipartite(spec.delta, spec.n)
    if fam == "path":
        _need(spec.length >= 1, "path needs length >= 1")
        return path_graph(spec.length)
    if fam == "even-cycle":
        _need(spec.length >= 4 and spec.length % 2 == 0, "even-cycle needs an even length >= 4")
        return even_cycle(spec.length)
    if fam == "random3d":
        _need(spec.n >= 1 and spec.delta >= 1, "random3d needs n >= 1 and delta >= 1")
        return random3d(spec.n, spec.delta, spec.seed, spec.b_count)
    if fam == "cycle-rich":
        _need(spec.n >= 2 and spec.delta >= 1, "cycle-rich needs n >= 2 and delta >= 1")
        return cycle_rich(spec.n, spec.delta, spec.seed)
    raise InvalidParameters(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")


def _need(ok: bool, msg: str) -> None:
    if not ok:
        raise InvalidParameters(msg)


def complete_bipartite(a_count: int, b_count: int) -> BipartiteGraph:
    return BipartiteGraph(a_count, b_count, tuple((a, b) for a in range(a_count) for b in range(b_count)))


def path_graph(length: int) -> BipartiteGraph:
    # vertices alternate a0 b0 a1 b1 ...
    edges = []
    for i in range(length):
        edges.append((i // 2, i // 2) if i % 2 == 0 else ((i + 1) // 2, i // 2))
    a_count = max(a for a, _ in edges) + 1
    b_count = max(b for _, b in edges) + 1
    return BipartiteGraph(a_count, b_count, tuple(edges))


def even_cycle(length: int) -> BipartiteGraph:
    k = length // 2
    edges = []
    for t in range(k):
        edges.append((t, t))
        edges.append((t, (t + 1) % k))
    return BipartiteGraph(k, k, tuple(edges))


def random3d(n: int, delta: int, seed: int, b_count: int | None = None, attempts: int = 200) -> BipartiteGraph:
    """Random graph with every A-vertex of degree min(3, |B|) and d_B <= delta."""
    if b_count is None:
        b_count = max(3, math.ceil(3 * n / delta) + 2)
    deg = min(MAX_A_DEGREE, b_count)
    if deg * n > delta * b_count:
        raise InvalidParameters(f"{n} A-vertices of degree {deg} do not fit under delta={delta} with {b_count} B-vertices")
    rng = random.Random(seed)
    for _ in range(attempts):
        load = [0] * b_count
        edges: list[Edge] = []
        for a in range(n):
            open_b = [b for b in range(b_count) if load[b] < delta]
            if len(open_b) < deg:
                break
            for b in sorted(rng.sample(open_b, deg)):
                load[b] += 1
                edges.append((a, b))
        else:
            return BipartiteGraph(n, b_count, tuple(edges))
    raise InvalidParameters(f"random3d(n={n}, delta={delta}, seed={seed}) failed after {attempts} attempts")


def cycle_rich(n: int, delta: int, seed: int) -> BipartiteGraph:
    """Disjoint-ish even cycles whose A-vertices share a small pool of third neighbours.

    The A-vertices form even cycles of random half-length 2..5; each gets a
    third neighbour drawn from a pool of about ``n / delta`` B-vertices, so
    many cycle vertices share the same off-cycle neighbour.
    """
    rng = random.Random(seed)
    edges: list[Edge] = []
    a = 0
    b = 0
    cycles: list[list[int]] = []
    while a < n:
        k = min(rng.randint(2, 5), n - a)
        if k < 2:
            break
        cyc = list(range(a, a + k))
        for t in range(k):
            edges.append((a + t, b + t))
            edges.append((a + t, b + (t + 1) % k))
        cycles.append(cyc)
        a += k
        b += k
    pool_size = max(1, math.ceil(a / max(1, delta - 2)))
    pool = list(range(b, b + pool_size))
    load = {p: 0 for p in pool}
    cap = max(1, delta)
    for v in range(a):
        choices = [p for p in pool if load[p] < cap]
        if not choices:
            pool.append(b + len(load))
            load[pool[-1]] = 0
            choices = [pool[-1]]
        p = rng.choice(choices)
        load[p] += 1
        edges.append((v, p))
    return BipartiteGraph(a, b + len(load), tuple(edges))
