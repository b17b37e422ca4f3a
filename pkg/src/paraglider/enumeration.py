"""Exhaustive scans over small labeled graphs.

Edges of a labeled graph on n vertices are numbered in the order
(0,1), (0,2), ..., (0,n-1), (1,2), ...; bit i of an edge mask is edge i.
The hereditary generators add one vertex at a time and keep only the
extensions that stay in the class, which reaches every labeled member
exactly once (a graph is determined by its chain of prefix subgraphs).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .cover import color
from .exact import chromatic_number, max_clique, theta_triangle_free
from .graph import Graph, bits
from .patterns import p2p3_witness

MAX_ENUM_N = 7


def pair_index(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    rows = [0] * n
    for i, (u, v) in enumerate(pairs or pair_index(n)):
        if mask >> i & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph._trusted(n, tuple(rows))


def mask_of_graph(g: Graph) -> int:
    return sum(1 << i for i, (u, v) in enumerate(pair_index(g.n)) if g.has_edge(u, v))


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled graphs, by edge-mask counter."""
    pairs = pair_index(n)
    for mask in range(1 << len(pairs)):
        yield graph_from_mask(n, mask, pairs)


def _extend(n: int, ok) -> Iterator[tuple[int, ...]]:
    # ok(rows, v, nbrs) decides whether vertex v with neighbor set nbrs keeps
    # the prefix graph in the class.
    def rec(rows: list[int], v: int):
        if v == n:
            yield tuple(rows)
            return
        for nbrs in range(1 << v):
            if ok(rows, v, nbrs):
                for u in bits(nbrs):
                    rows[u] |= 1 << v
                rows.append(nbrs)
                yield from rec(rows, v + 1)
                rows.pop()
                for u in bits(nbrs):
                    rows[u] &= ~(1 << v)

    yield from rec([], 0)


def _no_3k1_through(rows: list[int], v: int, nbrs: int) -> bool:
    # The non-neighbors of the new vertex must form a clique.
    far = ((1 << v) - 1) & ~nbrs
    for u in bits(far):
        if far & ~rows[u] & ~(1 << u):
            return False
    return True


def _no_k3_through(rows: list[int], v: int, nbrs: int) -> bool:
    for u in bits(nbrs):
        if rows[u] & nbrs:
            return False
    return True


def alpha_two_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices with no independent set of size 3."""
    for rows in _extend(n, _no_3k1_through):
        yield Graph._trusted(n, rows)


def triangle_free_graphs(n: int) -> Iterator[Graph]:
    for rows in _extend(n, _no_k3_through):
        yield Graph._trusted(n, rows)


def target_class_graphs(n: int) -> Iterator[Graph]:
    """Every labeled {3K1, paraglider}-free graph on n vertices."""
    for g in alpha_two_graphs(n):
        if p2p3_witness(g.complement()) is None:
            yield g


def edge_list(g: Graph) -> list[tuple[int, int]]:
    return list(g.edges())


@dataclass
class ScanReport:
    n: int
    scanned: int = 0
    target: int = 0
    violations: list[tuple[list[tuple[int, int]], str]] = field(default_factory=list)
    tight: int = 0  # graphs whose coloring meets the bound with equality

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha_le_2": self.scanned,
            "target_class": self.target,
            "tight": self.tight,
            "violations": [{"edges": [list(e) for e in edges], "reason": why} for edges, why in self.violations],
        }


def check_target_graph(g: Graph, exact_chi: bool = True) -> tuple[list[str], bool]:
    """Violations of the coloring and clique bounds on one target-class graph,
    and whether the coloring meets the bound with equality."""
    out = []
    n = g.n
    omega = max_clique(g).bit_count()
    coloring, _ = color(g)
    if any(coloring.colors[u] == coloring.colors[v] for u, v in g.edges()):
        out.append("coloring not proper")
    if coloring.count > max(omega + 3, 2 * omega - 2):
        out.append(f"{coloring.count} colors exceeds the bound for omega={omega}")
    if n and 3 * omega < n - 1:
        out.append(f"omega={omega} below (n-1)/3")
    if exact_chi:
        theta, _ = theta_triangle_free(g.complement())
        chi = chromatic_number(g)
        if theta != chi:
            out.append(f"n - mu(complement)={theta} but chi={chi}")
        if coloring.count < chi:
            out.append("fewer colors than chi")
    return out, coloring.count == max(omega + 3, 2 * omega - 2)


def scan(n: int, exact_chi: bool = True) -> ScanReport:
    """Check the coloring and clique bounds on every target-class graph on n vertices."""
    if not 0 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration is limited to n <= {MAX_ENUM_N}")
    report = ScanReport(n)
    for g in alpha_two_graphs(n):
        report.scanned += 1
        if p2p3_witness(g.complement()) is not None:
            continue
        report.target += 1
        problems, tight = check_target_graph(g, exact_chi)
        for why in problems:
            report.violations.append((edge_list(g), why))
        report.tight += tight
    return report
