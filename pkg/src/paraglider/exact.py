"""Exact invariants by brute force, plus the matching route to θ.

These are the ground-truth oracles the constructive code is checked
against.  Budgets are explicit: asking for an invariant on a graph larger
than its cap raises :class:`BudgetExceeded` instead of running for hours.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, NotTriangleFreeError
from .graph import Graph, bits, lowest, max_matching, two_coloring
from .patterns import triangle

CLIQUE_CAP = 40
COLORING_CAP = 16


def _greedy_color_order(adj: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    """Greedy coloring of ``cand``; vertices listed by non-decreasing color."""
    order: list[int] = []
    colors: list[int] = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = lowest(avail)
            avail &= ~adj[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique(g: Graph, cap: int = CLIQUE_CAP) -> int:
    """A maximum clique as a bitmask (branch and bound with coloring bounds)."""
    if g.n > cap:
        raise BudgetExceeded("omega", g.n, cap)
    adj = g.adj
    best = 0
    best_size = 0

    def expand(clique: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        order, colors = _greedy_color_order(adj, cand)
        for idx in range(len(order) - 1, -1, -1):
            if size + colors[idx] <= best_size:
                return
            v = order[idx]
            new_clique = clique | 1 << v
            new_cand = cand & adj[v]
            if new_cand:
                expand(new_clique, size + 1, new_cand)
            elif size + 1 > best_size:
                best, best_size = new_clique, size + 1
            cand &= ~(1 << v)

    if g.n:
        expand(0, 0, g.vertices)
    return best


def max_independent_set(g: Graph, cap: int = CLIQUE_CAP) -> int:
    if g.n > cap:
        raise BudgetExceeded("alpha", g.n, cap)
    return max_clique(g.complement(), cap)


def clique_number(g: Graph, cap: int = CLIQUE_CAP) -> int:
    return max_clique(g, cap).bit_count()


def independence_number(g: Graph, cap: int = CLIQUE_CAP) -> int:
    return max_independent_set(g, cap).bit_count()


def _k_coloring(g: Graph, k: int, seed_clique: int) -> list[int] | None:
    # DSATUR-style backtracking; the seed clique is pre-colored 0..|Q|-1.
    n = g.n
    adj = g.adj
    color = [-1] * n
    classes = [0] * k
    used = 0
    for v in bits(seed_clique):
        color[v] = used
        classes[used] |= 1 << v
        used += 1
    uncolored = g.vertices & ~seed_clique

    def pick(uncolored: int) -> int:
        best_v, best_key = -1, (-1, -1)
        for v in bits(uncolored):
            sat = sum(1 for c in range(used) if classes[c] & adj[v])
            key = (sat, (adj[v] & uncolored).bit_count())
            if key > best_key:
                best_v, best_key = v, key
        return best_v

    def solve(uncolored: int) -> bool:
        nonlocal used
        if not uncolored:
            return True
        v = pick(uncolored)
        rest = uncolored & ~(1 << v)
        for c in range(used):
            if not classes[c] & adj[v]:
                classes[c] |= 1 << v
                color[v] = c
                if solve(rest):
                    return True
                classes[c] &= ~(1 << v)
        if used < k:
            c = used
            used += 1
            classes[c] |= 1 << v
            color[v] = c
            if solve(rest):
                return True
            classes[c] &= ~(1 << v)
            used -= 1
        color[v] = -1
        return False

    return color if solve(uncolored) else None


def chromatic_coloring(g: Graph, cap: int = COLORING_CAP) -> list[int]:
    """An optimal proper coloring, as a list of color indices per vertex."""
    if g.n > cap:
        raise BudgetExceeded("chi", g.n, cap)
    if g.n == 0:
        return []
    seed = max_clique(g)
    k = seed.bit_count()
    while True:
        coloring = _k_coloring(g, k, seed)
        if coloring is not None:
            return coloring
        k += 1


def chromatic_number(g: Graph, cap: int = COLORING_CAP) -> int:
    coloring = chromatic_coloring(g, cap)
    return max(coloring, default=-1) + 1


def min_clique_cover(g: Graph, cap: int = COLORING_CAP) -> list[int]:
    """A minimum partition of V(g) into cliques, as bitmasks."""
    if g.n > cap:
        raise BudgetExceeded("theta", g.n, cap)
    coloring = chromatic_coloring(g.complement(), cap)
    parts: dict[int, int] = {}
    for v, c in enumerate(coloring):
        parts[c] = parts.get(c, 0) | 1 << v
    return sorted(parts.values(), key=lowest)


@dataclass(frozen=True)
class InvariantReport:
    omega: int
    alpha: int
    chi: int
    theta: int
    clique: int
    independent_set: int
    coloring: tuple[int, ...]
    cover: tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        if not g.is_clique(self.clique) or self.clique.bit_count() != self.omega:
            return False
        if not g.is_independent(self.independent_set) or self.independent_set.bit_count() != self.alpha:
            return False
        if len(self.coloring) != g.n or len(set(self.coloring)) != self.chi:
            return False
        if any(self.coloring[u] == self.coloring[v] for u, v in g.edges()):
            return False
        return is_clique_cover(g, self.cover) and len(self.cover) == self.theta


def brute_invariants(g: Graph, clique_cap: int = CLIQUE_CAP, coloring_cap: int = COLORING_CAP) -> InvariantReport:
    """ω, α, χ and θ with witnesses.

    ω/α are limited to ``clique_cap`` vertices, χ/θ to ``coloring_cap``.
    """
    if g.n > coloring_cap:
        raise BudgetExceeded("chi", g.n, coloring_cap)
    clique = max_clique(g, clique_cap)
    indep = max_independent_set(g, clique_cap)
    coloring = chromatic_coloring(g, coloring_cap)
    cover = min_clique_cover(g, coloring_cap)
    return InvariantReport(
        omega=clique.bit_count(),
        alpha=indep.bit_count(),
        chi=max(coloring, default=-1) + 1,
        theta=len(cover),
        clique=clique,
        independent_set=indep,
        coloring=tuple(coloring),
        cover=tuple(cover),
    )


def is_clique_cover(g: Graph, parts) -> bool:
    seen = 0
    for part in parts:
        if not part or part & seen or not g.is_clique(part):
            return False
        seen |= part
    return seen == g.vertices


def theta_triangle_free(h: Graph) -> tuple[int, list[int]]:
    """Exact clique cover number of a triangle-free graph as n - |maximum matching|.

    Cliques of a triangle-free graph have at most two vertices, so a
    minimum cover is a maximum matching plus singletons.  Returns the count
    and the cover (bitmasks ordered by smallest vertex).
    """
    t = triangle(h)
    if t is not None:
        raise NotTriangleFreeError(t)
    matching = max_matching(h)
    covered = 0
    parts = []
    for u, v in matching:
        parts.append(1 << u | 1 << v)
        covered |= 1 << u | 1 << v
    parts.extend(1 << v for v in bits(h.vertices & ~covered))
    parts.sort(key=lowest)
    return len(parts), parts


def bipartite_max_independent_set(h: Graph, matching: list[tuple[int, int]] | None = None) -> int:
    """A maximum independent set of a bipartite graph via König's theorem."""
    side = two_coloring(h)
    if side is None:
        raise ValueError("graph is not bipartite")
    if matching is None:
        matching = max_matching(h)
    mate = [-1] * h.n
    for u, v in matching:
        mate[u], mate[v] = v, u
    left = sum(1 << v for v in range(h.n) if side[v] == 0)
    # Alternating reachability from unmatched left vertices.
    reach = frontier = sum(1 << v for v in bits(left) if mate[v] == -1)
    while frontier:
        nxt = 0
        for v in bits(frontier):
            if side[v] == 0:
                nxt |= h.adj[v]
            elif mate[v] != -1:
                nxt |= 1 << mate[v]
        frontier = nxt & ~reach
        reach |= frontier
    cover = (left & ~reach) | (~left & reach & h.vertices)
    return h.vertices & ~cover
