"""Simple undirected graphs on at most 128 vertices with bitset rows.

A vertex set is a plain ``int`` used as a bitmask (bit ``v`` set means
vertex ``v`` is a member).  Graphs are immutable; every operation here is
a pure function.
"""

from __future__ import annotations

import os
from collections import deque
from collections.abc import Iterable, Iterator, Sequence

from .errors import GraphParseError, GraphSizeError

HARD_MAX_N = 128


def max_vertices() -> int:
    """The active vertex cap; ``PARAGLIDER_MAX_N`` may only lower it."""
    raw = os.environ.get("PARAGLIDER_MAX_N")
    if not raw:
        return HARD_MAX_N
    try:
        value = int(raw)
    except ValueError:
        return HARD_MAX_N
    return max(0, min(value, HARD_MAX_N))


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a bitmask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """A simple undirected graph stored as one neighbor bitmask per vertex."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]) -> None:
        cap = max_vertices()
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if n > cap:
            raise GraphSizeError("vertex count", n, cap)
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits above vertex {n - 1}")
            if row >> v & 1:
                raise ValueError(f"vertex {v} is adjacent to itself")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")
        self.n = n
        self.adj = tuple(adj)
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, adj: Sequence[int]) -> Graph:
        # Skips validation; callers guarantee a symmetric irreflexive table.
        g = object.__new__(cls)
        g.n = n
        g.adj = tuple(adj)
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        cap = max_vertices()
        if n > cap:
            raise GraphSizeError("vertex count", n, cap)
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, adj)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls.from_edges(n, ())

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls._trusted(n, [full ^ (1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def vertices(self) -> int:
        """All vertices as a bitmask."""
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighborhood(self, vertex_set: int) -> int:
        """N(S): vertices outside S with a neighbor in S."""
        out = 0
        for v in bits(vertex_set):
            out |= self.adj[v]
        return out & ~vertex_set

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edges_within(self, vertex_set: int) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in bits(vertex_set)
            for v in bits(self.adj[u] & vertex_set & ~((2 << u) - 1))
        ]

    def is_independent(self, vertex_set: int) -> bool:
        return all(not self.adj[v] & vertex_set for v in bits(vertex_set))

    def is_clique(self, vertex_set: int) -> bool:
        return all((self.adj[v] | 1 << v) & vertex_set == vertex_set for v in bits(vertex_set))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled 0..k-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = [0] * len(vertices)
        for i, v in enumerate(vertices):
            row = 0
            for u in bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    row |= 1 << j
            adj[i] = row
        return Graph._trusted(len(vertices), adj)

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph._trusted(self.n, [full ^ row ^ (1 << v) for v, row in enumerate(self.adj)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complement(g: Graph) -> Graph:
    return g.complement()


def components(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by their smallest vertex."""
    out = []
    remaining = g.vertices
    while remaining:
        comp = frontier = remaining & -remaining
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-coloring (list of 0/1) or None when ``g`` is not bipartite."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    layer = 1 << source
    seen = layer
    d = 0
    while layer:
        d += 1
        nxt = 0
        for v in bits(layer):
            nxt |= g.adj[v]
        nxt &= ~seen
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        layer = nxt
    return dist


def _odd_girth_through(g: Graph, source: int, dist: list[int]) -> int | None:
    # Smallest 2d+1 over edges joining two vertices of BFS layer d.
    best = None
    for u in range(g.n):
        du = dist[u]
        if du < 0 or (best is not None and 2 * du + 1 >= best):
            continue
        for w in bits(g.adj[u] >> (u + 1) << (u + 1)):
            if dist[w] == du:
                best = 2 * du + 1
                break
    return best


def shortest_odd_cycle(g: Graph) -> list[int] | None:
    """A shortest odd cycle as a vertex list in cyclic order, or None if bipartite.

    Among shortest odd cycles the one through the lowest possible start
    vertex is chosen, then the lexicographically smallest sequence from it.
    A shortest odd cycle never has a chord.
    """
    best_len = None
    best_start = -1
    dists = {}
    for s in range(g.n):
        dist = _bfs_distances(g, s)
        length = _odd_girth_through(g, s, dist)
        if length is not None and (best_len is None or length < best_len):
            best_len, best_start = length, s
            dists[s] = dist
            if length == 3:
                break
    if best_len is None:
        return None
    s, length, dist = best_start, best_len, dists[best_start]

    path = [s]
    on_path = 1 << s

    def extend() -> bool:
        nonlocal on_path
        k = len(path)
        last = path[-1]
        if k == length:
            return bool(g.adj[last] >> s & 1)
        for w in bits(g.adj[last] & ~on_path):
            # after stepping to w, length - k edges remain to return to s
            if dist[w] <= length - k:
                path.append(w)
                on_path |= 1 << w
                if extend():
                    return True
                path.pop()
                on_path &= ~(1 << w)
        return False

    if not extend():
        raise AssertionError("odd girth computed but no cycle of that length found")
    return path


def max_matching(g: Graph) -> list[tuple[int, int]]:
    """Maximum-cardinality matching by Edmonds' blossom algorithm.

    Returns the matched pairs ``(u, v)`` with ``u < v``, sorted.
    """
    n = g.n
    nbrs = [list(bits(row)) for row in g.adj]
    mate = [-1] * n

    # Greedy start; the augmenting phase makes the result maximum regardless.
    for v in range(n):
        if mate[v] == -1:
            for u in nbrs[v]:
                if mate[u] == -1:
                    mate[v], mate[u] = u, v
                    break

    def augment_from(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = in_blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        while to != -1:
                            pv = parent[to]
                            nxt = mate[pv]
                            mate[to], mate[pv] = pv, to
                            to = nxt
                        return True
                    used[mate[to]] = True
                    queue.append(mate[to])
        return False

    for root in range(n):
        if mate[root] == -1 and nbrs[root]:
            augment_from(root)
    return sorted((v, mate[v]) for v in range(n) if mate[v] > v)


def is_matching(g: Graph, pairs: Iterable[tuple[int, int]]) -> bool:
    used = 0
    for u, v in pairs:
        if not g.has_edge(u, v):
            return False
        if used >> u & 1 or used >> v & 1:
            return False
        used |= 1 << u | 1 << v
    return True


# -- text format ----------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the edge-list text format.

    The first non-comment line holds ``n``; every later non-comment line
    is ``u v`` with ``0 <= u < v < n``.  ``#`` starts a comment line and
    blank lines are skipped.  Duplicate edges, loops, reversed pairs and
    non-ASCII input are errors.
    """
    n = None
    adj: list[int] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        if "\r" in raw:
            raise GraphParseError("CR characters are not allowed (LF line endings only)", lineno)
        if not raw.isascii() or any(not (c.isprintable() or c == "\t") for c in raw):
            raise GraphParseError("non-printable or non-ASCII character", lineno)
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not fields[0].isdigit():
                raise GraphParseError(f"expected the vertex count, got {line!r}", lineno)
            n = int(fields[0])
            cap = max_vertices()
            if n > cap:
                raise GraphSizeError("vertex count", n, cap)
            adj = [0] * n
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", lineno)
        if u > v:
            raise GraphParseError(f"edge ({u}, {v}) must be written with u < v", lineno)
        if v >= n:
            raise GraphParseError(f"vertex {v} out of range for n={n}", lineno)
        if adj[u] >> v & 1:
            raise GraphParseError(f"duplicate edge ({u}, {v})", lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if n is None:
        raise GraphParseError("missing vertex count")
    return Graph._trusted(n, adj)


def format_graph(g: Graph, comment: str | None = None) -> str:
    """Canonical text form: vertex count, then edges sorted lexicographically."""
    lines = []
    if comment:
        lines.extend("# " + part for part in comment.splitlines())
    lines.append(str(g.n))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str | os.PathLike[str]) -> Graph:
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise GraphParseError(f"non-ASCII input at byte {exc.start}") from exc
    return parse_graph(text)
