"""Repair loop that drives a B-singular decomposition to stability.

Six switch rules, each undoing a configuration that a stable decomposition
must not contain:

R1  a lonely/dispersed edge ``ab`` of part i, and a paired or dispersed
    part-i edge at another neighbour ``a1`` of ``b``: swap ``ab`` and ``a1b``.
R2  an A-vertex of H_i whose two paired edges both end inside H_i: swap each
    paired edge with the lonely part-i edge at its B-end.
R3  a paired part-i edge ``ab`` and another neighbour ``a'`` of ``b`` whose
    pair is also in part i: swap ``ab`` and ``a'b``.
R4  an H_i cycle vertex ``a`` whose off-cycle neighbour ``b'`` carries a
    non-triplex part-i edge ``e``: swap ``a0b0``/``b0a`` and ``ab'``/``e``.
R5  a part-i type-1 vertex ``v`` adjacent to the off-cycle neighbours of
    two different H_i cycles: four simultaneous swaps making both cycle
    vertices type 1.
R6  an H_i cycle of length 2k, k odd, with consecutive ``a_t, a_{t+1}``
    sharing a neighbour other than ``b_{t+1}``: swap ``a_t b_{t+1}`` and
    ``a_{t+1} b_{t+1}``.

Every applied move must raise the potential (t1, t2, -odd_cycles)
lexicographically; a move that does not is reported as an invariant breach.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .decomposition import Decomposition, EdgeKind
from .errors import PotentialNotIncreased, StructureViolation
from .hi import AuditReport, Cycle, _peel, _walk_cycle, build_hi, components, odd_cycle_count

RULES = ("R1", "R2", "R3", "R4", "R5", "R6")

TRIPLEX, PAIRED, LONELY, DISPERSED = EdgeKind


@dataclass(frozen=True)
class PotentialTuple:
    t1: int
    t2: int
    odd_cycles: int

    def key(self) -> tuple[int, int, int]:
        return (self.t1, self.t2, -self.odd_cycles)


@dataclass(frozen=True)
class RepairMove:
    rule: str
    swaps: tuple[tuple[int, int], ...]
    witness: tuple[int, ...]

    def sort_key(self) -> tuple:
        return (RULES.index(self.rule), min(self.witness), self.witness)

    def describe(self) -> str:
        sw = " ".join(f"e{e + 1}->{p + 1}" for e, p in self.swaps)
        return f"{self.rule} witness {' '.join(f'e{e + 1}' for e in self.witness)} swaps {sw}"


def type_counts(d: Decomposition) -> tuple[int, int]:
    return d.level.count(1), d.level.count(2)


def odd_cycles(d: Decomposition) -> int:
    return sum(odd_cycle_count(build_hi(d, i)) for i in range(d.n_parts))


def potential(d: Decomposition) -> PotentialTuple:
    t1, t2 = type_counts(d)
    return PotentialTuple(t1, t2, odd_cycles(d))


# ---------------------------------------------------------------------------
# scans


def _scan_r1(d: Decomposition) -> Iterator[RepairMove]:
    g, po, kind = d.graph, d.part_of, d.kind
    for e, (a, b) in enumerate(g.edges):
        if kind[e] not in (LONELY, DISPERSED):
            continue
        i = po[e]
        for f1 in g.b_inc[b]:
            if f1 == e:
                continue
            a1 = g.edges[f1][0]
            bad = [f for f in g.a_inc[a1] if po[f] == i and kind[f] in (PAIRED, DISPERSED)]
            if bad:
                yield RepairMove("R1", ((f1, i), (e, po[f1])), (e, f1, bad[0]))


def _scan_r2(d: Decomposition) -> Iterator[RepairMove]:
    g, po = d.graph, d.part_of
    for i in range(d.n_parts):
        for ell in d.lonely_edges(i):
            v = g.edges[ell][0]
            p1, p2 = (f for f in g.a_inc[v] if f != ell)
            e1 = d.part_at_b(g.edges[p1][1], i)
            e2 = d.part_at_b(g.edges[p2][1], i)
            if e1 is None or e2 is None or d.kind[e1] != LONELY or d.kind[e2] != LONELY:
                continue
            j = po[p1]
            yield RepairMove("R2", ((e1, j), (p1, i), (e2, j), (p2, i)), (ell, p1, p2, e1, e2))


def _scan_r3(d: Decomposition) -> Iterator[RepairMove]:
    g, po = d.graph, d.part_of
    for e, (a, b) in enumerate(g.edges):
        if d.kind[e] != PAIRED:
            continue
        i = po[e]
        for f1 in g.b_inc[b]:
            if f1 == e:
                continue
            a1 = g.edges[f1][0]
            if d.level[a1] == 2 and d.vpart[a1] == i:
                yield RepairMove("R3", ((e, po[f1]), (f1, i)), (e, f1))


def part_cycles(d: Decomposition, i: int) -> list[Cycle]:
    """Alternating cycles of the unicyclic components of H_i.

    Components with several cycles or a non-alternating cycle are skipped;
    they cannot occur without an R2 configuration being present.
    """
    h = build_hi(d, i)
    out = []
    for verts, edges in components(h):
        if len(edges) - len(verts) + 1 != 1:
            continue
        try:
            out.append(_walk_cycle(h, d, _peel(h, verts)))
        except StructureViolation:
            continue
    return out


def _scan_r4(d: Decomposition, cycles: list[list[Cycle]]) -> Iterator[RepairMove]:
    g, po = d.graph, d.part_of
    for i, cs in enumerate(cycles):
        for c in cs:
            k = c.k
            for t in range(k):
                a, bp = c.a[t], c.b_prime[t]
                e = d.part_at_b(bp, i)
                if e is None or d.kind[e] == TRIPLEX:
                    continue
                ab_prime = g.edge_index(a, bp)
                link = c.links[t]
                nxt_lonely = c.lonely[(t + 1) % k]
                j = po[link]
                yield RepairMove(
                    "R4",
                    ((nxt_lonely, j), (link, i), (ab_prime, i), (e, po[ab_prime])),
                    (c.lonely[t], e),
                )


def _scan_r5(d: Decomposition, cycles: list[list[Cycle]]) -> Iterator[RepairMove]:
    g, po = d.graph, d.part_of
    for i, cs in enumerate(cycles):
        if len(cs) < 2:
            continue
        on_cycle = [set(c.b) for c in cs]
        hang: dict[int, list[tuple[int, int]]] = {}
        for ci, c in enumerate(cs):
            for t, bp in enumerate(c.b_prime):
                hang.setdefault(bp, []).append((ci, t))
        for v in range(g.a_count):
            if d.level[v] != 1 or d.vpart[v] != i:
                continue
            nb = g.a_nbrs[v]
            for x in range(3):
                for y in range(x + 1, 3):
                    v1, v2 = nb[x], nb[y]
                    for c1, t1 in hang.get(v1, ()):
                        for c2, t2 in hang.get(v2, ()):
                            if c1 == c2:
                                continue
                            if {v1, v2} & (on_cycle[c1] | on_cycle[c2]):
                                continue
                            swaps = []
                            for ci, t, vx in ((c1, t1, v1), (c2, t2, v2)):
                                c = cs[ci]
                                at = c.a[t]
                                link = c.links[t]
                                nxt_lonely = c.lonely[(t + 1) % c.k]
                                a_vx = g.edge_index(at, vx)
                                v_vx = g.edge_index(v, vx)
                                swaps += [(nxt_lonely, po[link]), (link, i), (a_vx, i), (v_vx, po[a_vx])]
                            w = (g.edge_index(v, v1), g.edge_index(v, v2), cs[c1].lonely[t1], cs[c2].lonely[t2])
                            yield RepairMove("R5", tuple(swaps), w)


def _scan_r6(d: Decomposition, cycles: list[list[Cycle]]) -> Iterator[RepairMove]:
    g, po = d.graph, d.part_of
    for i, cs in enumerate(cycles):
        for c in cs:
            if not c.odd:
                continue
            k = c.k
            for t in range(k):
                at, an = c.a[t], c.a[(t + 1) % k]
                shared = (set(g.a_nbrs[at]) & set(g.a_nbrs[an])) - {c.b[(t + 1) % k]}
                if not shared:
                    continue
                link = c.links[t]
                nxt_lonely = c.lonely[(t + 1) % k]
                b = min(shared)
                yield RepairMove(
                    "R6",
                    ((link, i), (nxt_lonely, po[link])),
                    (link, nxt_lonely, g.edge_index(at, b)),
                )


def _rule_groups(d: Decomposition) -> Iterator[list[RepairMove]]:
    yield _dedupe(_scan_r1(d))
    yield _dedupe(_scan_r2(d))
    yield _dedupe(_scan_r3(d))
    cycles = [part_cycles(d, i) for i in range(d.n_parts)]
    yield _dedupe(_scan_r4(d, cycles))
    yield _dedupe(_scan_r5(d, cycles))
    yield _dedupe(_scan_r6(d, cycles))


def _dedupe(moves: Iterator[RepairMove]) -> list[RepairMove]:
    seen: dict[tuple, RepairMove] = {}
    for m in moves:
        key = tuple(sorted(m.swaps))
        if key not in seen or m.sort_key() < seen[key].sort_key():
            seen[key] = m
    return sorted(seen.values(), key=RepairMove.sort_key)


def scan_violations(d: Decomposition) -> list[RepairMove]:
    out: list[RepairMove] = []
    for group in _rule_groups(d):
        out.extend(group)
    return out


def first_violation(d: Decomposition) -> RepairMove | None:
    """Same as ``scan_violations(d)[0]`` but stops at the first rule with findings."""
    for group in _rule_groups(d):
        if group:
            return group[0]
    return None


def audit_rules(d: Decomposition) -> AuditReport:
    rep = AuditReport()
    for rule, group in zip(RULES, _rule_groups(d)):
        rep.add(rule, [tuple(f"e{e + 1}" for e in m.witness) for m in group])
    return rep


# ---------------------------------------------------------------------------
# moves


def _compare(before: Decomposition, after: Decomposition) -> tuple[tuple, tuple]:
    """Potential keys of both sides; odd-cycle census only when (t1, t2) ties."""
    kb, ka = type_counts(before), type_counts(after)
    if kb != ka:
        return kb + (None,), ka + (None,)
    return kb + (-odd_cycles(before),), ka + (-odd_cycles(after),)


def apply_move(d: Decomposition, m: RepairMove) -> Decomposition:
    new, _, _ = _apply(d, m)
    return new


def _apply(d: Decomposition, m: RepairMove) -> tuple[Decomposition, tuple, tuple]:
    new = d.with_parts(m.swaps)
    new.check_singular()
    kb, ka = _compare(d, new)
    increased = ka[:2] > kb[:2] if kb[2] is None else ka > kb
    if not increased:
        raise PotentialNotIncreased(f"{m.describe()}: potential {kb} -> {ka}")
    return new, kb, ka


def move_bound(d: Decomposition) -> int:
    g = d.graph
    return (g.a_count + 1) ** 2 * (g.n_edges + 1)


def stabilize(
    d: Decomposition,
    on_move: Callable[[RepairMove, tuple, tuple], None] | None = None,
) -> Decomposition:
    """Apply the smallest violation repeatedly until none is left.

    ``on_move(move, key_before, key_after)`` is called after every applied
    move; keys are (t1, t2, -odd_cycles) with the last entry ``None`` when
    the first two already decide the comparison.
    """
    d.check_singular()
    bound = move_bound(d)
    n = 0
    while True:
        m = first_violation(d)
        if m is None:
            return d
        n += 1
        if n > bound:
            raise PotentialNotIncreased(f"move count exceeded the bound {bound}")
        d, kb, ka = _apply(d, m)
        if on_move is not None:
            on_move(m, kb, ka)
