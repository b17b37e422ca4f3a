"""The acceptance suite, shared by ``paraglider selftest`` and the test suite.

Each criterion returns a :class:`CriterionResult`; ``run`` prints one
PASS/FAIL line per criterion.  Time targets are part of the criteria, so a
run that is correct but over its time budget is reported as a failure.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable

import numpy as np

from .certify import oh_small
from .cover import build_cover, witness_independent_set
from .decompose import decompose, validate_structure
from .enumeration import alpha_two_graphs, graph_from_mask, pair_index, scan, triangle_free_graphs
from .exact import chromatic_number, independence_number, min_clique_cover, theta_triangle_free
from .families import GenParams, make_bhat, make_hstar, make_ht, random_class_member
from .graph import Graph, bits, max_matching
from .patterns import PatternName, find_induced_subgraph, is_isomorphic, pattern_graph


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    seconds: float
    limit: float | None
    failures: list[str] = field(default_factory=list)
    notes: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        budget = f" (limit {self.limit:.0f} s)" if self.limit else ""
        extra = f"; {len(self.failures)} violation(s): {self.failures[0]}" if self.failures else ""
        notes = f"; {self.notes}" if self.notes else ""
        return f"[{status}] criterion {self.number}: {self.title} in {self.seconds:.1f} s{budget}{notes}{extra}"


def _timed(number: int, title: str, limit: float | None, body: Callable[[list[str]], str]) -> CriterionResult:
    failures: list[str] = []
    start = time.perf_counter()
    notes = body(failures)
    seconds = time.perf_counter() - start
    if limit is not None and seconds > limit:
        failures.append(f"took {seconds:.1f} s, limit {limit:.0f} s")
    return CriterionResult(number, title, not failures, seconds, limit, failures, notes or "")


def _expect(failures: list[str], label: str, got, want) -> None:
    if got != want:
        failures.append(f"{label}: got {got}, expected {want}")


# -- criterion 1 ---------------------------------------------------------------

def criterion_1() -> CriterionResult:
    def body(fail: list[str]) -> str:
        hstar, bhat2 = make_hstar(), make_bhat(2)
        for label, h, alpha, theta in (("H*", hstar, 5, 8), ("Bhat_2", bhat2, 4, 6), ("H_1", make_ht(1), 4, 5), ("H_2", make_ht(2), 6, 8)):
            _expect(fail, f"alpha({label})", independence_number(h), alpha)
            _expect(fail, f"theta_tf({label})", theta_triangle_free(h)[0], theta)
            if h.n <= 16:
                _expect(fail, f"theta_brute({label})", len(min_clique_cover(h)), theta)
        for t in range(1, 6):
            _expect(fail, f"alpha(H_{t})", independence_number(make_ht(t)), 2 * t + 2)
        return ""

    return _timed(1, "named-example regression", 1.0, body)


# -- criterion 2 ---------------------------------------------------------------

def criterion_2(max_n: int = 7) -> CriterionResult:
    def body(fail: list[str]) -> str:
        counts = []
        for n in range(max_n + 1):
            report = scan(n)
            counts.append(f"n={n}:{report.target}")
            fail.extend(f"n={n} {edges}: {why}" for edges, why in report.violations)
        return "target-class graphs " + " ".join(counts)

    return _timed(2, f"exhaustive target class n <= {max_n}", 600.0, body)


# -- criterion 3 ---------------------------------------------------------------

def _pattern_tables() -> dict[PatternName, np.ndarray]:
    """For each pattern on k vertices: which edge masks on k labeled vertices are copies of it."""
    out = {}
    for p in PatternName:
        pat = pattern_graph(p)
        k = pat.n
        idx = {pair: i for i, pair in enumerate(pair_index(k))}
        table = np.zeros(1 << len(idx), dtype=bool)
        for perm in permutations(range(k)):
            m = 0
            for u, v in pat.edges():
                a, b = sorted((perm[u], perm[v]))
                m |= 1 << idx[(a, b)]
            table[m] = True
        out[p] = table
    return out


def subset_isomorphism_oracle(n: int) -> dict[PatternName, np.ndarray]:
    """has-induced-copy flags for every labeled graph on n vertices, indexed by edge mask.

    Independent of the backtracking matcher: for every k-subset of vertices,
    the induced edge mask is looked up in the pattern's table of labeled copies.
    """
    tables = _pattern_tables()
    pairs = pair_index(n)
    where = {pair: i for i, pair in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.uint32)
    out = {p: np.zeros(masks.shape, dtype=bool) for p in PatternName}
    by_size: dict[int, list[PatternName]] = {}
    for p in PatternName:
        by_size.setdefault(pattern_graph(p).n, []).append(p)
    for k, pats in by_size.items():
        if k > n:
            continue
        sub_pairs = pair_index(k)
        for subset in combinations(range(n), k):
            sub = np.zeros(masks.shape, dtype=np.uint32)
            for i, (a, b) in enumerate(sub_pairs):
                bit = where[(subset[a], subset[b])]
                sub |= ((masks >> np.uint32(bit)) & np.uint32(1)) << np.uint32(i)
            for p in pats:
                out[p] |= tables[p][sub]
    return out


def _witness_ok(pattern: Graph, g: Graph, w: tuple[int, ...]) -> bool:
    if len(set(w)) != pattern.n:
        return False
    return all(pattern.has_edge(a, b) == g.has_edge(w[a], w[b]) for a in range(pattern.n) for b in range(a + 1, pattern.n))


def criterion_3(max_n: int = 7) -> CriterionResult:
    def body(fail: list[str]) -> str:
        for n in range(max_n + 1):
            for h in triangle_free_graphs(n):
                mu = len(max_matching(h))
                theta = len(min_clique_cover(h))
                if h.n - mu != theta:
                    fail.append(f"n={n} {list(h.edges())}: n-mu={h.n - mu}, theta={theta}")
        pats = [(p, pattern_graph(p)) for p in PatternName]
        checked = 0
        for n in range(max_n + 1):
            oracle = subset_isomorphism_oracle(n)
            flags = [(pat, oracle[p].tolist(), p) for p, pat in pats]
            pairs = pair_index(n)
            for mask in range(1 << len(pairs)):
                g = graph_from_mask(n, mask, pairs)
                for pat, truth, p in flags:
                    w = find_induced_subgraph(pat, g)
                    if (w is not None) != truth[mask]:
                        fail.append(f"{p.value} on n={n} mask={mask}: matcher {w is not None}, oracle {truth[mask]}")
                    elif w is not None and (n < 7 or mask % 64 == 0) and not _witness_ok(pat, g, w):
                        fail.append(f"{p.value} on n={n} mask={mask}: bad witness {w}")
                checked += 1
        return f"{checked} labeled graphs x {len(pats)} patterns"

    return _timed(3, f"matching and pattern oracles n <= {max_n}", None, body)


# -- criterion 4 ---------------------------------------------------------------

def refined_bound(label: str, alpha: int) -> int:
    if label == "B1":
        return 2 * alpha - 2
    if label == "B2":
        return 3 * alpha // 2 - 1
    return alpha + 3


def criterion_4(count: int = 500) -> CriterionResult:
    def body(fail: list[str]) -> str:
        largest = 0
        labels: dict[str, int] = {}
        for seed in range(count):
            h = random_class_member(GenParams(seed=seed, n_target=8 + seed % 33))
            largest = max(largest, h.n)
            try:
                d = decompose(h)
                report = validate_structure(h, d)
                for check in report.violations:
                    fail.append(f"seed {seed}: {check.name} violated, witness {check.witness}")
                cover, trace = build_cover(h)
                alpha = independence_number(h)
                bound = refined_bound(trace.label, alpha)
                labels[trace.label] = labels.get(trace.label, 0) + 1
                if len(cover) > bound:
                    fail.append(f"seed {seed}: cover {len(cover)} > {bound} ({trace.label}, alpha={alpha})")
                w = witness_independent_set(h, d)
                if 3 * w.largest < h.n - 1:
                    fail.append(f"seed {seed}: witness {w.largest} below (n-1)/3")
            except Exception as exc:  # any error is a violation for this criterion
                fail.append(f"seed {seed}: {type(exc).__name__}: {exc}")
        mix = ", ".join(f"{k}={v}" for k, v in sorted(labels.items()))
        return f"max n={largest}; {mix}"

    return _timed(4, f"randomized structure suite ({count} members)", 300.0, body)


# -- criterion 5 ---------------------------------------------------------------

def _invariant(g: Graph) -> tuple:
    degs = [g.degree(v) for v in range(g.n)]
    return (g.n, g.m, tuple(sorted((degs[v], tuple(sorted(degs[u] for u in bits(g.adj[v])))) for v in range(g.n))))


def isomorphism_classes(graphs) -> list[tuple[Graph, int]]:
    """Representatives with multiplicities, bucketed by a degree invariant."""
    buckets: dict[tuple, list[list]] = {}
    for g in graphs:
        bucket = buckets.setdefault(_invariant(g), [])
        for entry in bucket:
            if is_isomorphic(entry[0], g):
                entry[1] += 1
                break
        else:
            bucket.append([g, 1])
    return [(rep, count) for bucket in buckets.values() for rep, count in bucket]


def criterion_5(max_n: int = 7) -> CriterionResult:
    def body(fail: list[str]) -> str:
        classes = labeled = 0
        for n in range(max_n + 1):
            for g, mult in isomorphism_classes(alpha_two_graphs(n)):
                classes += 1
                labeled += mult
                oh = oh_small(g)
                chi = chromatic_number(g)
                if oh < chi:
                    fail.append(f"n={n} {list(g.edges())}: oh={oh} < chi={chi}")
                if (oh >= chi) != (oh >= math.ceil(n / 2)):
                    fail.append(f"n={n} {list(g.edges())}: equivalence fails (oh={oh}, chi={chi})")
        _expect(fail, "oh(C5)", oh_small(Graph.cycle(5)), 3)
        for t in range(1, 7):
            _expect(fail, f"oh(K{t})", oh_small(Graph.complete(t)), t)
        return f"{labeled} labeled graphs in {classes} isomorphism classes"

    return _timed(5, f"odd-minor suite n <= {max_n}", 900.0, body)


# -- criterion 6 ---------------------------------------------------------------

def criterion_6() -> CriterionResult:
    def body(fail: list[str]) -> str:
        cases = (
            ("Bhat_2", make_bhat(2), lambda a: 2 * a - 2, "2alpha-2"),
            ("H_1", make_ht(1), lambda a: 3 * a // 2 - 1, "3alpha/2-1"),
            ("H_2", make_ht(2), lambda a: 3 * a // 2 - 1, "3alpha/2-1"),
            ("H*", make_hstar(), lambda a: a + 3, "alpha+3"),
        )
        out = []
        for label, h, f, claim in cases:
            cover, trace = build_cover(h)
            alpha = independence_number(h)
            _expect(fail, f"|cover({label})|", len(cover), f(alpha))
            _expect(fail, f"claim({label})", trace.claimed, claim)
            out.append(f"{label}={len(cover)}")
        return " ".join(out)

    return _timed(6, "tightness on the three families", None, body)


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
}


def run(numbers=None, emit: Callable[[str], None] = print) -> list[CriterionResult]:
    results = []
    for k in numbers or sorted(CRITERIA):
        result = CRITERIA[k]()
        emit(result.line())
        results.append(result)
    return results

