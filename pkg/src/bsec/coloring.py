"""Three colors per part, 3 * delta_eff colors overall.

Each part is colored greedily in a fixed order: triplex edges (with a
mandated prefix around every H_i cycle), paired, dispersed, then lonely
edges along the cycles and down the BFS trees of H_i.  At every step the
already-colored same-part edges seen by the current edge may use at most
two colors; if that ever fails the run aborts with the trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .decomposition import Decomposition, EdgeKind, initial_decomposition
from .errors import InvariantBreach, NoColorAvailable, StructureViolation
from .graph import BipartiteGraph, pad_to_cubic
from .hi import Cycle, HiStructure, analyze_hi, audit_hi, build_hi
from .repair import stabilize

COLORS_PER_PART = 3

NO_TRIPLEX = "no-triplex-at-b0'"
ALL_EQUAL = "all-b'-equal"
ADJACENT = "adjacent-pair"
DISJOINT = "disjoint-pair"


@dataclass(frozen=True)
class CyclePlan:
    component: int
    rotation: int
    cycle: Cycle
    case: str
    prefix: tuple[int, ...] = ()
    e0: int | None = None
    e1: int | None = None


@dataclass
class PartialColoring:
    part: int
    colors: dict[int, int]
    trace: list[tuple[int, int]] = field(default_factory=list)


@dataclass
class StrongColoring:
    colors: list[int]
    n_parts: int
    moves: int = 0
    traces: list[PartialColoring] | None = None

    @property
    def bound(self) -> int:
        return COLORS_PER_PART * self.n_parts

    @property
    def used_count(self) -> int:
        return len(set(self.colors))


def _triplex_mates(d: Decomposition, e: int) -> list[int]:
    a = d.graph.edges[e][0]
    return sorted(f for f in d.graph.a_inc[a] if f != e)


def plan_cycle(d: Decomposition, i: int, comp_id: int, c: Cycle) -> CyclePlan:
    k = c.k
    at_bp = [d.part_at_b(bp, i) for bp in c.b_prime]
    has_trip = [e is not None and d.kind[e] == EdgeKind.TRIPLEX for e in at_bp]
    for t in range(k):
        if not has_trip[t]:
            return CyclePlan(comp_id, t, c.rotated(t), NO_TRIPLEX)
    for t in range(k):
        if c.b_prime[t] != c.b_prime[(t + 1) % k]:
            e0, e1 = at_bp[t], at_bp[(t + 1) % k]
            a0, a1 = d.graph.edges[e0][0], d.graph.edges[e1][0]
            if a0 == a1:
                rest = [f for f in _triplex_mates(d, e0) if f != e1]
                return CyclePlan(comp_id, t, c.rotated(t), ADJACENT, (e0, e1, rest[0]), e0, e1)
            m0, m1 = _triplex_mates(d, e0), _triplex_mates(d, e1)
            prefix = (e0, m0[0], m0[1], m1[0], e1, m1[1])
            return CyclePlan(comp_id, t, c.rotated(t), DISJOINT, prefix, e0, e1)
    return CyclePlan(comp_id, 0, c, ALL_EQUAL)


def plan_triplex_order(d: Decomposition, i: int, s: HiStructure) -> tuple[list[int], dict[int, CyclePlan]]:
    plans = {comp.id: plan_cycle(d, i, comp.id, comp.cycle) for comp in s.components if comp.cycle is not None}
    order: list[int] = []
    done: set[int] = set()
    for cid in sorted(plans):
        for e in plans[cid].prefix:
            if e not in done:
                done.add(e)
                order.append(e)
    rest = [e for e in d.part_edges(i) if d.kind[e] == EdgeKind.TRIPLEX and e not in done]
    return order + rest, plans


def plan_lonely_order(s: HiStructure, plans: dict[int, CyclePlan] | None = None) -> list[int]:
    plans = plans or {}
    lonely = s.hi.lonely
    order: list[int] = []
    for comp in s.components:
        if comp.cycle is not None:
            c = plans[comp.id].cycle if comp.id in plans else comp.cycle
            order.extend(c.lonely[1:])
            order.append(c.lonely[0])
        for tree in sorted(comp.trees, key=lambda t: t.root):
            order.extend(e for e in tree.edge_order if e in lonely)
    return order


def color_order(d: Decomposition, i: int, s: HiStructure) -> tuple[list[int], dict[int, CyclePlan]]:
    triplex, plans = plan_triplex_order(d, i, s)
    edges = d.part_edges(i)
    paired = [e for e in edges if d.kind[e] == EdgeKind.PAIRED]
    dispersed = [e for e in edges if d.kind[e] == EdgeKind.DISPERSED]
    order = triplex + paired + dispersed + plan_lonely_order(s, plans)
    if sorted(order) != edges:
        raise StructureViolation(f"part {i + 1}: coloring order does not cover the part exactly once")
    return order, plans


def color_part(g: BipartiteGraph, d: Decomposition, i: int, s: HiStructure) -> PartialColoring:
    order, plans = color_order(d, i, s)
    # the first cycle edge b_1 a_1 must repeat the color of e_0'
    prefer = {p.cycle.lonely[1]: p.e0 for p in plans.values() if p.e0 is not None}
    colors: dict[int, int] = {}
    trace: list[tuple[int, int]] = []
    seen_by = g.seen_by
    for e in order:
        taken = {colors[f] for f in seen_by[e] if f in colors}
        if len(taken) >= COLORS_PER_PART:
            blockers = sorted(f + 1 for f in seen_by[e] if f in colors)
            raise NoColorAvailable(
                f"part {i + 1}: edge {e + 1} ({d.kind[e].name.lower()}) sees colors {sorted(taken)} "
                f"on edges {blockers}; order so far {[x + 1 for x, _ in trace]}"
            )
        want = colors.get(prefer[e]) if e in prefer else None
        c = want if want is not None and want not in taken else min(set(range(COLORS_PER_PART)) - taken)
        colors[e] = c
        trace.append((e, c))
    return PartialColoring(i, colors, trace)


def color_decomposition(d: Decomposition, keep_traces: bool = False) -> tuple[list[int], list[PartialColoring]]:
    g = d.graph
    colors = [-1] * g.n_edges
    parts = []
    for i in range(d.n_parts):
        h = build_hi(d, i)
        s = analyze_hi(h, d)
        rep = audit_hi(s, d)
        if not rep.ok:
            raise StructureViolation(f"part {i + 1}: " + "; ".join(x for x in rep.lines() if x.startswith("violation")))
        pc = color_part(g, d, i, s)
        for e, c in pc.colors.items():
            colors[e] = COLORS_PER_PART * i + c
        if keep_traces:
            parts.append(pc)
    return colors, parts


def strong_color(g: BipartiteGraph, keep_traces: bool = False) -> StrongColoring:
    """Strong edge-coloring of ``g`` with at most ``3 * max(3, d_B)`` colors."""
    from .verify import verify

    padded, rec = pad_to_cubic(g)
    moves = 0

    def count(*_: object) -> None:
        nonlocal moves
        moves += 1

    d = stabilize(initial_decomposition(padded), on_move=count)
    colors, parts = color_decomposition(d, keep_traces)
    result = StrongColoring(colors[: rec.original_edge_count], d.n_parts, moves, parts if keep_traces else None)
    verdict = verify(g, result.colors)
    if not verdict.valid or result.used_count > result.bound:
        raise InvariantBreach(f"internal verification failed: {verdict.violations[:5]}, {result.used_count} colors")
    return result
