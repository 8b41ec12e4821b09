from __future__ import annotations

import pytest
from hypothesis import given, settings

from bsec.coloring import (
    ADJACENT,
    ALL_EQUAL,
    DISJOINT,
    NO_TRIPLEX,
    color_decomposition,
    color_order,
    color_part,
    plan_cycle,
    plan_lonely_order,
    plan_triplex_order,
    strong_color,
)
from bsec.corpus import planted_cycles
from bsec.decomposition import Decomposition, EdgeKind
from bsec.graph import BipartiteGraph, complete_bipartite, format_coloring, random3d
from bsec.hi import analyze_hi, build_hi
from bsec.repair import scan_violations, stabilize
from bsec.verify import verify
from helpers import build
from strategies import bipartite_graphs
from test_hi import four_cycle
from test_repair import k33_all_type1

ADJACENT_SPEC = [
    ("a0", "b0", 0), ("a0", "b1", 1), ("a0", "s0", 1),
    ("a1", "b1", 0), ("a1", "b0", 2), ("a1", "s1", 2),
    ("v", "s0", 0), ("v", "s1", 0), ("v", "w", 0),
]
DISJOINT_SPEC = [
    ("a0", "b0", 0), ("a1", "b1", 0), ("a2", "b2", 0),
    ("a0", "b1", 1), ("a0", "s0", 1),
    ("a1", "b2", 2), ("a1", "s1", 2),
    ("a2", "b0", 3), ("a2", "s2", 3),
    ("v", "s0", 0), ("v", "x", 0), ("v", "y", 0),
    ("w", "s1", 0), ("w", "z", 0), ("w", "q", 0),
    ("u", "s2", 0), ("u", "p", 0), ("u", "r", 0),
]
ALL_EQUAL_SPEC = [
    ("a0", "b0", 0), ("a0", "b1", 1), ("a0", "s", 1),
    ("a1", "b1", 0), ("a1", "b0", 2), ("a1", "s", 2),
    ("v", "s", 0), ("v", "x", 0), ("v", "y", 0),
]


def _stable(spec, n_parts=None):
    d, nm = build(spec, n_parts)
    assert scan_violations(d) == []
    return d, nm, analyze_hi(build_hi(d, 0), d)


def _plan(d, s):
    (comp,) = [c for c in s.components if c.cycle is not None]
    return plan_cycle(d, 0, comp.id, comp.cycle)


# ---- ordering


def test_triplex_order_without_cycles():
    d = k33_all_type1()
    s = analyze_hi(build_hi(d, 0), d)
    order, plans = plan_triplex_order(d, 0, s)
    assert plans == {} and order == d.part_edges(0)


def test_adjacent_pair_prefix():
    d, nm, s = _stable(ADJACENT_SPEC)
    p = _plan(d, s)
    assert p.case == ADJACENT
    assert p.prefix == (nm["v-s0"], nm["v-s1"], nm["v-w"])


def test_disjoint_pair_prefix():
    d, nm, s = _stable(DISJOINT_SPEC, 4)
    p = _plan(d, s)
    assert p.case == DISJOINT
    assert p.prefix == (nm["v-s0"], nm["v-x"], nm["v-y"], nm["w-z"], nm["w-s1"], nm["w-q"])
    order, _ = plan_triplex_order(d, 0, s)
    assert order[:6] == list(p.prefix)
    assert order[6:] == sorted(order[6:])


def test_no_triplex_and_all_equal_cases():
    d, _ = four_cycle()
    assert _plan(d, analyze_hi(build_hi(d, 0), d)).case == NO_TRIPLEX
    d, _, s = _stable(ALL_EQUAL_SPEC)
    assert _plan(d, s).case == ALL_EQUAL


def test_lonely_order_empty_and_single():
    d = k33_all_type1()
    assert plan_lonely_order(analyze_hi(build_hi(d, 0), d)) == []
    g = BipartiteGraph(1, 3, ((0, 0), (0, 1), (0, 2)))
    d = Decomposition(g, (0, 0, 2), 3)
    assert plan_lonely_order(analyze_hi(build_hi(d, 2), d)) == [2]


def test_lonely_order_six_cycle():
    d, nm, s = _stable(DISJOINT_SPEC, 4)
    assert plan_lonely_order(s, {}) == [nm["a1-b1"], nm["a2-b2"], nm["a0-b0"]]


def test_color_order_sections():
    d, nm, s = _stable(DISJOINT_SPEC, 4)
    order, _ = color_order(d, 0, s)
    kinds = [d.kind[e] for e in order]
    rank = {EdgeKind.TRIPLEX: 0, EdgeKind.PAIRED: 1, EdgeKind.DISPERSED: 2, EdgeKind.LONELY: 3}
    assert [rank[k] for k in kinds] == sorted(rank[k] for k in kinds)


# ---- greedy


def test_color_type1_star():
    d = k33_all_type1()
    pc = color_part(d.graph, d, 0, analyze_hi(build_hi(d, 0), d))
    assert sorted(pc.colors.values()) == [0, 1, 2]


def test_color_single_lonely_edge():
    g = BipartiteGraph(1, 3, ((0, 0), (0, 1), (0, 2)))
    d = Decomposition(g, (0, 0, 2), 3)
    pc = color_part(g, d, 2, analyze_hi(build_hi(d, 2), d))
    assert pc.colors == {2: 0}


def test_disjoint_case_forced_repeat():
    d, nm, s = _stable(DISJOINT_SPEC, 4)
    g = d.graph
    pc = color_part(g, d, 0, s)
    assert pc.colors[nm["a1-b1"]] == pc.colors[nm["v-s0"]]
    step = [e for e, _ in pc.trace].index(nm["a0-b0"])
    before = {e for e, _ in pc.trace[:step]}
    seen = [f for f in g.seen_by[nm["a0-b0"]] if f in before]
    assert len(seen) == 3
    assert len({pc.colors[f] for f in seen}) == 2


def test_adjacent_case_colors():
    d, nm, s = _stable(ADJACENT_SPEC)
    pc = color_part(d.graph, d, 0, s)
    assert len(set(pc.colors.values())) <= 3
    colors, _ = color_decomposition(d)
    assert verify(d.graph, colors).valid


# ---- pipeline


def test_strong_color_k33():
    res = strong_color(complete_bipartite(3, 3))
    assert res.used_count == 9 == res.bound
    assert verify(complete_bipartite(3, 3), res.colors).valid


def test_strong_color_single_edge():
    res = strong_color(BipartiteGraph(1, 1, ((0, 0),)))
    assert res.colors == [0] and res.used_count == 1


def test_strong_color_random3d_30_6_11():
    g = random3d(30, 6, 11)
    res = strong_color(g)
    assert verify(g, res.colors).valid
    assert res.used_count <= 18


def test_strong_color_is_deterministic():
    g = random3d(40, 5, 9)
    assert format_coloring(strong_color(g).colors) == format_coloring(strong_color(g).colors)


@settings(max_examples=150, deadline=None)
@given(bipartite_graphs())
def test_strong_color_properties(g):
    res = strong_color(g, keep_traces=True)
    assert verify(g, res.colors).valid
    assert res.used_count <= 3 * g.delta_eff
    for pc in res.traces:
        assert len(set(pc.colors.values())) <= 3
    for e, c in enumerate(res.colors):
        assert c // 3 == [pc.part for pc in res.traces if e in pc.colors][0]


@pytest.mark.parametrize("seed", range(300))
def test_planted_cycles_color_without_breach(seed):
    d0 = planted_cycles(seed)
    if d0 is None:
        return
    d = stabilize(d0)
    colors, _ = color_decomposition(d)
    assert verify(d.graph, colors).valid
