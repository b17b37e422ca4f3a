"""Naive oracles for tiny graphs, written without any package helpers.

Graphs are given as (n, edge set of sorted pairs).  Everything here is
plain enumeration so it can be trusted by inspection.
"""

from __future__ import annotations

from itertools import combinations, permutations, product


def edge_set(g) -> frozenset[tuple[int, int]]:
    return frozenset((u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] >> v & 1)


def adjacent(E, u, v) -> bool:
    return (min(u, v), max(u, v)) in E


def alpha(n, E) -> int:
    for k in range(n, 0, -1):
        for S in combinations(range(n), k):
            if all(not adjacent(E, u, v) for u, v in combinations(S, 2)):
                return k
    return 0


def omega(n, E) -> int:
    for k in range(n, 0, -1):
        for S in combinations(range(n), k):
            if all(adjacent(E, u, v) for u, v in combinations(S, 2)):
                return k
    return 0


def chi(n, E) -> int:
    if n == 0:
        return 0
    for k in range(1, n + 1):
        # fix vertex 0 to color 0 to trim the search a little
        for rest in product(range(k), repeat=n - 1):
            col = (0,) + rest
            if all(col[u] != col[v] for u, v in E):
                return k
    return n


def complement_edges(n, E):
    return frozenset((u, v) for u, v in combinations(range(n), 2) if (u, v) not in E)


def theta(n, E) -> int:
    return chi(n, complement_edges(n, E))


def matching_number(E) -> int:
    edges = sorted(E)

    def best(i, used):
        if i == len(edges):
            return 0
        u, v = edges[i]
        skip = best(i + 1, used)
        if u in used or v in used:
            return skip
        return max(skip, 1 + best(i + 1, used | {u, v}))

    return best(0, frozenset())


def bipartite(n, E) -> bool:
    return any(all(side[u] != side[v] for u, v in E) for side in product((0, 1), repeat=n)) if n else True


def has_triangle(n, E) -> bool:
    return any(adjacent(E, a, b) and adjacent(E, b, c) and adjacent(E, a, c) for a, b, c in combinations(range(n), 3))


def connected(n, E) -> bool:
    if n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in range(n):
            if v not in seen and adjacent(E, u, v):
                seen.add(v)
                stack.append(v)
    return len(seen) == n


def induced_copy(pn, PE, n, E) -> bool:
    """Does some injective map of the pattern's vertices preserve edges and non-edges?"""
    for S in permutations(range(n), pn):
        if all(adjacent(PE, a, b) == adjacent(E, S[a], S[b]) for a, b in combinations(range(pn), 2)):
            return True
    return False


def _spans(members, E, col) -> bool:
    """Are the members connected using only edges whose ends get different colors?"""
    members = list(members)
    seen = {members[0]}
    stack = [members[0]]
    while stack:
        u = stack.pop()
        for v in members:
            if v not in seen and adjacent(E, u, v) and col[u] != col[v]:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(members)


def odd_clique_minor(n, E, t) -> bool:
    """Try every assignment of vertices to t branch sets (or none) and every 2-coloring."""
    if t == 0:
        return True
    for label in product(range(t + 1), repeat=n):
        sets = [[v for v in range(n) if label[v] == i] for i in range(t)]
        if any(not s for s in sets):
            continue
        for col in product((0, 1), repeat=n):
            if not all(_spans(s, E, col) for s in sets):
                continue
            if all(
                any(adjacent(E, u, v) and col[u] == col[v] for u in sets[i] for v in sets[j])
                for i, j in combinations(range(t), 2)
            ):
                return True
    return False
