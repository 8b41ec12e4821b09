"""B-singular decompositions and the vertex/edge classification they induce.

A decomposition assigns every edge a part in ``range(n_parts)`` so that no
B-vertex meets a part twice.  Each A-vertex of degree 3 is then type 1
(one part), type 2 (a 2+1 split) or type 3 (three parts); edge kinds follow
from the type of the A-endpoint.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import SingularityBroken
from .graph import BipartiteGraph


class EdgeKind(enum.IntEnum):
    TRIPLEX = 0
    PAIRED = 1
    LONELY = 2
    DISPERSED = 3


@dataclass(frozen=True)
class VertexType:
    """``level`` is 1, 2 or 3.  ``part`` is the shared part for types 1 and 2."""

    level: int
    part: int | None = None


class Decomposition:
    """Immutable edge -> part map over an A-cubic graph.

    Derived classification (vertex levels, edge kinds, lonely edges per part)
    is computed once at construction; moves produce new instances.
    """

    __slots__ = ("graph", "n_parts", "part_of", "level", "vpart", "kind", "_lonely")

    def __init__(self, graph: BipartiteGraph, part_of: Sequence[int], n_parts: int | None = None):
        self.graph = graph
        self.n_parts = graph.delta_eff if n_parts is None else n_parts
        self.part_of = tuple(part_of)
        if len(self.part_of) != graph.n_edges:
            raise ValueError(f"{len(self.part_of)} parts for {graph.n_edges} edges")
        if any(not 0 <= p < self.n_parts for p in self.part_of):
            raise ValueError("part index out of range")
        self._classify()

    def _classify(self) -> None:
        g, po = self.graph, self.part_of
        level = [0] * g.a_count
        vpart: list[int | None] = [None] * g.a_count
        kind: list[EdgeKind | None] = [None] * g.n_edges
        lonely: list[list[int]] = [[] for _ in range(self.n_parts)]
        for a, inc in enumerate(g.a_inc):
            if len(inc) != 3:
                continue
            e0, e1, e2 = inc
            p0, p1, p2 = po[e0], po[e1], po[e2]
            if p0 == p1 == p2:
                level[a], vpart[a] = 1, p0
                kind[e0] = kind[e1] = kind[e2] = EdgeKind.TRIPLEX
            elif p0 == p1 or p0 == p2 or p1 == p2:
                if p0 == p1:
                    pair, solo = (e0, e1), e2
                elif p0 == p2:
                    pair, solo = (e0, e2), e1
                else:
                    pair, solo = (e1, e2), e0
                level[a], vpart[a] = 2, po[pair[0]]
                kind[pair[0]] = kind[pair[1]] = EdgeKind.PAIRED
                kind[solo] = EdgeKind.LONELY
                lonely[po[solo]].append(solo)
            else:
                level[a] = 3
                kind[e0] = kind[e1] = kind[e2] = EdgeKind.DISPERSED
        self.level = level
        self.vpart = vpart
        self.kind = kind
        self._lonely = tuple(tuple(sorted(x)) for x in lonely)

    def lonely_edges(self, part: int) -> tuple[int, ...]:
        return self._lonely[part]

    def part_edges(self, part: int) -> list[int]:
        return [e for e, p in enumerate(self.part_of) if p == part]

    def with_parts(self, swaps: Iterable[tuple[int, int]]) -> "Decomposition":
        po = list(self.part_of)
        for e, p in swaps:
            po[e] = p
        return Decomposition(self.graph, po, self.n_parts)

    def singularity_violations(self) -> list[tuple[int, int, tuple[int, ...]]]:
        """(b, part, edges) for every B-vertex meeting a part more than once."""
        out = []
        for b, inc in enumerate(self.graph.b_inc):
            by_part: dict[int, list[int]] = {}
            for e in inc:
                by_part.setdefault(self.part_of[e], []).append(e)
            out.extend((b, p, tuple(es)) for p, es in sorted(by_part.items()) if len(es) > 1)
        return out

    def check_singular(self) -> None:
        bad = self.singularity_violations()
        if bad:
            b, p, es = bad[0]
            raise SingularityBroken(f"B-vertex {b + 1} meets part {p + 1} on edges {[e + 1 for e in es]}")

    def part_at_b(self, b: int, part: int) -> int | None:
        for e in self.graph.b_inc[b]:
            if self.part_of[e] == part:
                return e
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.graph == other.graph and self.part_of == other.part_of and self.n_parts == other.n_parts

    def __hash__(self) -> int:
        return hash((self.part_of, self.n_parts))

    def __repr__(self) -> str:
        return f"Decomposition(n_parts={self.n_parts}, part_of={list(self.part_of)})"

    def dump(self) -> str:
        return "".join(f"d {e + 1} {p + 1}\n" for e, p in enumerate(self.part_of))


def initial_decomposition(g: BipartiteGraph) -> Decomposition:
    """Give the edges at every B-vertex parts 0, 1, 2, ... in incidence order."""
    po = [0] * g.n_edges
    for inc in g.b_inc:
        for i, e in enumerate(inc):
            po[e] = i
    return Decomposition(g, po)


def classify_vertex(d: Decomposition, a: int) -> VertexType:
    if len(d.graph.a_inc[a]) != 3:
        raise ValueError(f"A-vertex {a + 1} has degree {len(d.graph.a_inc[a])}, expected 3")
    return VertexType(d.level[a], d.vpart[a])


def classify_edge(d: Decomposition, e: int) -> EdgeKind:
    k = d.kind[e]
    if k is None:
        raise ValueError(f"edge {e + 1} hangs on an A-vertex of degree != 3")
    return k


def parse_decomposition(g: BipartiteGraph, text: str, n_parts: int | None = None) -> Decomposition:
    po: list[int | None] = [None] * g.n_edges
    for line in text.splitlines():
        tok = line.split()
        if len(tok) == 3 and tok[0] == "d":
            po[int(tok[1]) - 1] = int(tok[2]) - 1
    if any(p is None for p in po):
        raise ValueError("decomposition dump does not cover every edge")
    return Decomposition(g, po, n_parts)  # type: ignore[arg-type]
