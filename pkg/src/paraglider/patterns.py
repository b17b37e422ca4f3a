"""Fixed small patterns, induced-subgraph detection and class predicates.

Every pattern has a frozen vertex labeling (listed in ``_PATTERN_EDGES``);
witnesses are returned as tuples ``w`` with ``w[p]`` the host vertex that
plays pattern vertex ``p``.

Labelings::

    K3          triangle 0-1-2
    3K1         three isolated vertices
    2K2         edges 0-1, 2-3
    P2uP3       edge 0-1 and path 2-3-4 (3 is the middle vertex)
    C4          cycle 0-1-2-3
    C5, C7      cycle 0-1-...-(k-1)
    paraglider  cycle 0-1-2-3 plus apex 4 on 0, 1, 2
    house       cycle 0-1-2-3 plus roof 4 on 0, 1
    W4          cycle 0-1-2-3 plus hub 4 on all four
    kite        diamond 0-1-2-3 with chord 1-3, pendant 4 on 0
    hammer      triangle 0-1-2 with a two-edge tail 2-3-4
    butterfly   triangles 0-1-2 and 0-3-4 sharing vertex 0
    K1+P4       path 0-1-2-3 plus apex 4 on all four
    K1uK4       K4 on 0..3 plus isolated vertex 4
    K5          complete graph on 0..4
    claw        center 0 with leaves 1, 2, 3
"""

from __future__ import annotations

from enum import Enum

from .graph import Graph, bits, components, lowest, shortest_odd_cycle


class PatternName(str, Enum):
    K3 = "K3"
    THREE_K1 = "3K1"
    TWO_K2 = "2K2"
    P2_P3 = "P2uP3"
    C4 = "C4"
    C5 = "C5"
    C7 = "C7"
    PARAGLIDER = "paraglider"
    HOUSE = "house"
    W4 = "W4"
    KITE = "kite"
    HAMMER = "hammer"
    BUTTERFLY = "butterfly"
    K1_P4 = "K1+P4"
    K1_K4 = "K1uK4"
    K5 = "K5"
    CLAW = "claw"

    @classmethod
    def parse(cls, name: str | PatternName) -> PatternName:
        if isinstance(name, PatternName):
            return name
        aliases = {"P2∪P3": "P2uP3", "K1∪K4": "K1uK4", "paraglider": "paraglider"}
        key = aliases.get(name, name)
        for member in cls:
            if member.value.lower() == key.lower():
                return member
        raise ValueError(f"unknown pattern {name!r}")


def _cycle(k: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % k) for i in range(k)]


_C4 = _cycle(4)

_PATTERN_EDGES: dict[PatternName, tuple[int, list[tuple[int, int]]]] = {
    PatternName.K3: (3, [(0, 1), (1, 2), (0, 2)]),
    PatternName.THREE_K1: (3, []),
    PatternName.TWO_K2: (4, [(0, 1), (2, 3)]),
    PatternName.P2_P3: (5, [(0, 1), (2, 3), (3, 4)]),
    PatternName.C4: (4, _C4),
    PatternName.C5: (5, _cycle(5)),
    PatternName.C7: (7, _cycle(7)),
    PatternName.PARAGLIDER: (5, _C4 + [(4, 0), (4, 1), (4, 2)]),
    PatternName.HOUSE: (5, _C4 + [(4, 0), (4, 1)]),
    PatternName.W4: (5, _C4 + [(4, 0), (4, 1), (4, 2), (4, 3)]),
    PatternName.KITE: (5, _C4 + [(1, 3), (4, 0)]),
    PatternName.HAMMER: (5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]),
    PatternName.BUTTERFLY: (5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]),
    PatternName.K1_P4: (5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]),
    PatternName.K1_K4: (5, [(a, b) for a in range(4) for b in range(a + 1, 4)]),
    PatternName.K5: (5, [(a, b) for a in range(5) for b in range(a + 1, 5)]),
    PatternName.CLAW: (4, [(0, 1), (0, 2), (0, 3)]),
}

_PATTERN_CACHE: dict[PatternName, Graph] = {}


def pattern_graph(p: PatternName | str) -> Graph:
    p = PatternName.parse(p)
    g = _PATTERN_CACHE.get(p)
    if g is None:
        n, edges = _PATTERN_EDGES[p]
        g = _PATTERN_CACHE[p] = Graph.from_edges(n, edges)
    return g


def _search_order(pattern: Graph) -> list[int]:
    # Highest degree first, then grow along pattern edges so each new vertex
    # is constrained by as many placed vertices as possible.
    order: list[int] = []
    placed = 0
    while len(order) < pattern.n:
        rest = pattern.vertices & ~placed
        touching = pattern.neighborhood(placed) & rest if placed else 0
        pool = touching or rest
        best = max(bits(pool), key=lambda v: ((pattern.adj[v] & placed).bit_count(), pattern.degree(v), -v))
        order.append(best)
        placed |= 1 << best
    return order


_PLAN_CACHE: dict[tuple[int, tuple[int, ...]], tuple] = {}


def _plan(pattern: Graph) -> tuple:
    key = (pattern.n, pattern.adj)
    plan = _PLAN_CACHE.get(key)
    if plan is None:
        k = pattern.n
        order = _search_order(pattern)
        needs = tuple((pattern.degree(p), k - 1 - pattern.degree(p)) for p in order)
        # For each position, the earlier positions it must and must not touch.
        links = tuple(
            tuple((j, pattern.has_edge(order[i], order[j])) for j in range(i)) for i in range(k)
        )
        plan = _PLAN_CACHE[key] = (order, needs, links)
    return plan


def find_induced_subgraph(pattern: Graph, g: Graph) -> tuple[int, ...] | None:
    """An induced copy of ``pattern`` in ``g`` or None.

    Backtracks over injective maps, extending one pattern vertex at a time
    and only to host vertices whose degree and non-degree are large enough
    and whose adjacency to already-mapped vertices matches the pattern.
    """
    k = pattern.n
    n = g.n
    if k > n:
        return None
    if k == 0:
        return ()
    order, needs, links = _plan(pattern)
    adj = g.adj
    degs = [row.bit_count() for row in adj]
    allowed = []
    for need_in, need_out in needs:
        hi = n - 1 - need_out
        m = 0
        for v, d in enumerate(degs):
            if need_in <= d <= hi:
                m |= 1 << v
        if not m:
            return None
        allowed.append(m)
    # Iterative depth-first search; cands[pos] holds the untried images.
    image = [0] * k
    used = [0] * (k + 1)
    cands = [0] * k
    cands[0] = allowed[0]
    pos = 0
    while pos >= 0:
        c = cands[pos]
        if not c:
            pos -= 1
            continue
        low = c & -c
        cands[pos] = c ^ low
        image[pos] = low.bit_length() - 1
        if pos + 1 == k:
            witness = [0] * k
            for i, p in enumerate(order):
                witness[p] = image[i]
            return tuple(witness)
        mask = used[pos + 1] = used[pos] | low
        nxt = allowed[pos + 1] & ~mask
        for j, linked in links[pos + 1]:
            if linked:
                nxt &= adj[image[j]]
            else:
                nxt &= ~adj[image[j]]
        pos += 1
        cands[pos] = nxt
    return None


def find_induced(p: PatternName | str, g: Graph) -> tuple[int, ...] | None:
    """Witness for ``pattern_graph(p)`` as an induced subgraph of ``g``, or None."""
    return find_induced_subgraph(pattern_graph(p), g)


def has_induced(p: PatternName | str, g: Graph) -> bool:
    return find_induced(p, g) is not None


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(a.degree(v) for v in range(a.n)) != sorted(b.degree(v) for v in range(b.n)):
        return False
    return find_induced_subgraph(a, b) is not None


# -- fast witnesses used by the class predicates ---------------------------

def triangle(g: Graph) -> tuple[int, int, int] | None:
    for u in range(g.n):
        higher = g.adj[u] >> (u + 1) << (u + 1)
        for v in bits(higher):
            common = g.adj[u] & g.adj[v] & ~((2 << v) - 1)
            if common:
                return (u, v, lowest(common))
    return None


def p2p3_witness(g: Graph) -> tuple[int, int, int, int, int] | None:
    """An induced P2 ∪ P3 in P2uP3 label order, or None.

    For every edge uv, looks for a vertex with two non-adjacent neighbors
    among the vertices adjacent to neither u nor v.
    """
    adj = g.adj
    for u, v in g.edges():
        far = g.vertices & ~(adj[u] | adj[v] | 1 << u | 1 << v)
        for x in bits(far):
            nb = adj[x] & far
            while nb.bit_count() >= 2:
                y = lowest(nb)
                rest = nb & ~adj[y] & ~(1 << y)
                if rest:
                    return (u, v, y, x, lowest(rest))
                nb &= nb - 1
    return None


def three_k1_witness(g: Graph) -> tuple[int, int, int] | None:
    return triangle(g.complement())


def paraglider_witness(g: Graph) -> tuple[int, ...] | None:
    return find_induced(PatternName.PARAGLIDER, g)


# -- class predicates -------------------------------------------------------

def is_quasi_line(g: Graph) -> bool:
    """Every neighborhood splits into two cliques (its complement is bipartite)."""
    for v in range(g.n):
        nbhd = g.adj[v]
        color: dict[int, int] = {}
        for s in bits(nbhd):
            if s in color:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in bits(nbhd & ~g.adj[x] & ~(1 << x)):
                    if y not in color:
                        color[y] = 1 - color[x]
                        stack.append(y)
                    elif color[y] == color[x]:
                        return False
    return True


def class_H_failure(h: Graph) -> tuple[str, tuple[int, ...] | None] | None:
    """Why ``h`` is not an imperfect connected {K3, P2uP3}-free graph, or None."""
    if h.n == 0:
        return ("empty graph", None)
    t = triangle(h)
    if t is not None:
        return ("contains K3", t)
    w = p2p3_witness(h)
    if w is not None:
        return ("contains P2uP3", w)
    comps = components(h)
    if len(comps) > 1:
        return ("disconnected", tuple(lowest(c) for c in comps))
    if shortest_odd_cycle(h) is None:
        return ("bipartite (perfect)", None)
    return None


def in_class_H(h: Graph) -> bool:
    return class_H_failure(h) is None


def target_class_failure(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    w = find_induced(PatternName.THREE_K1, g)
    if w is not None:
        return ("contains 3K1", w)
    w = find_induced(PatternName.PARAGLIDER, g)
    if w is not None:
        return ("contains paraglider", w)
    return None


def is_target_class(g: Graph) -> bool:
    """True when ``g`` has no induced 3K1 and no induced paraglider."""
    return target_class_failure(g) is None
