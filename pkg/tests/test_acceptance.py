"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line."""

from __future__ import annotations

import hashlib
import os
import subprocess
import sys
import time
from collections import Counter
from pathlib import Path

import pytest

from bsec.coloring import color_decomposition, plan_triplex_order, strong_color
from bsec.corpus import planted_cycles, random_corpus, random_small, small_connected_graphs
from bsec.decomposition import Decomposition, initial_decomposition
from bsec.errors import NoColorAvailable
from bsec.graph import BipartiteGraph, complete_bipartite, cycle_rich, even_cycle, format_coloring, pad_to_cubic, path_graph
from bsec.hi import analyze_all, audit_hi
from bsec.repair import audit_rules, move_bound, stabilize
from bsec.verify import exact_chi_s, verify
from helpers import conclusion_failures

DELTAS = range(3, 9)
PER_DELTA = 100
MAX_A = 60
SEED = 0


def random_corpus_all() -> list[tuple[str, BipartiteGraph]]:
    return [item for delta in DELTAS for item in random_corpus(delta, PER_DELTA, SEED, MAX_A)]


def cycle_rich_corpus() -> list[tuple[str, BipartiteGraph]]:
    out = []
    for delta in DELTAS:
        for seed in range(40):
            n = 6 + (seed * 7) % 50
            out.append((f"cycle-rich-d{delta}-n{n}-s{seed}", cycle_rich(n, delta, seed)))
    return out


def planted_corpus(count: int = 1500) -> list[tuple[str, Decomposition]]:
    out = []
    for seed in range(count):
        d = planted_cycles(seed)
        if d is not None:
            out.append((f"planted-{seed}", d))
    return out


def report(capsys, n: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'} {detail}")


@pytest.fixture(scope="module")
def corpus():
    return random_corpus_all()


@pytest.fixture(scope="module")
def first_run(corpus):
    t0 = time.perf_counter()
    out = {}
    for name, g in corpus:
        res = strong_color(g)
        out[name] = (g, res)
    return out, time.perf_counter() - t0


def test_criterion_1_bound_at_desk_scale(first_run, capsys):
    runs, seconds = first_run
    bad = []
    worst = 0.0
    for name, (g, res) in runs.items():
        delta = int(name.split("-")[1][1:])
        worst = max(worst, res.used_count / (3 * delta))
        if not verify(g, res.colors).valid or res.used_count > 3 * delta:
            bad.append(name)
    ok = not bad and len(runs) == PER_DELTA * len(DELTAS) and seconds < 60
    report(capsys, 1, ok, f"{len(runs)} graphs, {len(bad)} failures, max used/3delta {worst:.3f}, {seconds:.1f}s (limit 60s)")
    assert ok, bad[:5]


def test_criterion_2_tightness_k3n(capsys):
    rows = []
    ok = True
    for n in range(3, 9):
        g = complete_bipartite(n, 3)
        r = exact_chi_s(g)
        used = strong_color(g).used_count
        rows.append(f"K3,{n}:{r.chi_s}/{used}")
        ok &= r.exact and r.chi_s == 3 * n == used
    report(capsys, 2, ok, "chi_s/used " + " ".join(rows))
    assert ok


def test_criterion_3_oracle_dominance(capsys):
    graphs = small_connected_graphs(8) + [random_small(s, 12) for s in range(500)]
    bad = []
    nonexact = 0
    for idx, g in enumerate(graphs):
        r = exact_chi_s(g)
        used = strong_color(g).used_count
        nonexact += not r.exact
        if not (r.exact and r.chi_s <= used <= 3 * g.delta_eff):
            bad.append((idx, r.line(), used))
    ok = not bad and len(graphs) == 223 + 500
    report(capsys, 3, ok, f"{len(graphs)} graphs (223 exhaustive + 500 random), {len(bad)} exceptions, {nonexact} non-exact")
    assert ok, bad[:5]


def _stable_decompositions(corpus, n_planted: int = 400):
    for name, g in corpus:
        yield name, stabilize(initial_decomposition(pad_to_cubic(g)[0]))
    for name, g in cycle_rich_corpus():
        yield name, stabilize(initial_decomposition(pad_to_cubic(g)[0]))
    for name, d in planted_corpus(n_planted):
        yield name, stabilize(d)


def test_criterion_4_stability_invariants(corpus, capsys):
    bad = []
    count = 0
    for name, d in _stable_decompositions(corpus):
        count += 1
        fails = conclusion_failures(d)
        if not audit_rules(d).ok:
            fails.append("scan")
        try:
            for s in analyze_all(d):
                rep = audit_hi(s, d)
                fails.extend(x for x in rep.lines() if x.startswith("violation"))
        except Exception as exc:  # a StructureViolation is a failure of this criterion
            fails.append(repr(exc))
        if fails:
            bad.append((name, fails[:3]))
    ok = not bad
    report(capsys, 4, ok, f"{count} stable decompositions, {len(bad)} with violations")
    assert ok, bad[:5]


def test_criterion_5_potential_monotone(corpus, capsys):
    bad = []
    total = most = 0
    starts = [(name, initial_decomposition(pad_to_cubic(g)[0])) for name, g in corpus]
    starts += [(name, initial_decomposition(pad_to_cubic(g)[0])) for name, g in cycle_rich_corpus()]
    starts += planted_corpus(400)
    for name, d0 in starts:
        moves = 0

        def check(m, kb, ka, name=name):
            nonlocal moves
            moves += 1
            increased = ka[:2] > kb[:2] if kb[2] is None else ka > kb
            if not increased:
                bad.append((name, m.describe(), kb, ka))

        stabilize(d0, on_move=check)
        total += moves
        most = max(most, moves)
        if moves > move_bound(d0):
            bad.append((name, "bound", moves, move_bound(d0)))
    ok = not bad
    report(capsys, 5, ok, f"{len(starts)} runs, {total} moves, max {most} per run, {len(bad)} non-increasing or over-bound")
    assert ok, bad[:5]


def test_criterion_6_greedy_availability(corpus, capsys):
    fired = []
    cases: Counter[str] = Counter()
    count = 0
    for name, d in _stable_decompositions(corpus, n_planted=2000):
        count += 1
        for s in analyze_all(d):
            _, plans = plan_triplex_order(d, s.part, s)
            cases.update(p.case for p in plans.values())
        try:
            colors, _ = color_decomposition(d)
        except NoColorAvailable as exc:
            fired.append((name, str(exc)[:200]))
            continue
        if not verify(d.graph, colors).valid:
            fired.append((name, "invalid"))
    ok = not fired
    summary = ", ".join(f"{k}={v}" for k, v in sorted(cases.items()))
    report(capsys, 6, ok, f"{count} instances incl. cycle-rich and planted, {len(fired)} assertion firings; cycle cases: {summary}")
    assert ok, fired[:5]


def test_criterion_7_specific_values(capsys):
    c6 = exact_chi_s(even_cycle(6))
    p3 = exact_chi_s(path_graph(3))
    single = strong_color(BipartiteGraph(1, 1, ((0, 0),)))
    ok = c6.exact and c6.chi_s == 3 and p3.exact and p3.chi_s == 3 and single.used_count == 1
    report(capsys, 7, ok, f"chi_s(C6)={c6.chi_s} chi_s(P3)={p3.chi_s} single edge colors={single.used_count}")
    assert ok


def _digest(texts: list[str]) -> str:
    return hashlib.sha256("".join(texts).encode()).hexdigest()


DIGEST_SCRIPT = """
import hashlib
from bsec.coloring import strong_color
from bsec.corpus import random_corpus
from bsec.graph import format_coloring
texts = [format_coloring(strong_color(g).colors) for d in range(3, 9) for _, g in random_corpus(d, {n}, 0, 60)]
print(hashlib.sha256("".join(texts).encode()).hexdigest())
"""


def test_criterion_8_determinism(first_run, corpus, capsys):
    runs, _ = first_run
    diff = [name for name, g in corpus if format_coloring(strong_color(g).colors) != format_coloring(runs[name][1].colors)]
    first = _digest([format_coloring(runs[name][1].colors) for name, _ in corpus])
    env = dict(os.environ, PYTHONHASHSEED="12345")
    proc = subprocess.run(
        [sys.executable, "-c", DIGEST_SCRIPT.format(n=PER_DELTA)],
        capture_output=True, text=True, env=env, cwd=Path(__file__).parent, check=True,
    )
    other = proc.stdout.strip()
    ok = not diff and other == first
    report(capsys, 8, ok, f"{len(corpus)} instances, {len(diff)} differing in-process, fresh-process digest {'matches' if other == first else 'differs'}")
    assert ok, diff[:5]
