"""Named extremal graphs and a seeded sampler for the class H.

Fixed labelings (0-based vertex ids):

* ``make_hstar()``: v_1..v_5 = 0..4, a_1..a_5 = 5..9, b_1..b_5 = 10..14, z = 15.
* ``make_bhat(s)``: cycle 0..4, x_j = 5+j in B_1, y_j = 5+s+j in B_2,
  z_j = 5+2s+j in S2 (j = 0..s-1).
* ``make_ht(t)``: cycle 0..4, then B_1..B_5 in blocks of t.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GraphSizeError, ParagliderError
from .graph import Graph, max_vertices
from .patterns import in_class_H

RETRY_BUDGET = 1000


def _c5_edges() -> list[tuple[int, int]]:
    return [(k, (k + 1) % 5) for k in range(5)]


def make_hstar() -> Graph:
    v = list(range(5))
    a = [5 + k for k in range(5)]
    b = [10 + k for k in range(5)]
    z = 15
    edges = _c5_edges()
    for k in range(5):
        edges.append((a[k], v[k]))
        edges.append((a[k], a[(k + 2) % 5]))
        edges.append((b[k], v[(k - 1) % 5]))
        edges.append((b[k], v[(k + 1) % 5]))
        edges.append((a[k], b[(k + 2) % 5]))
        edges.append((a[k], b[(k - 2) % 5]))
        edges.append((z, b[k]))
    return Graph.from_edges(16, {tuple(sorted(e)) for e in edges})


def make_bhat(s: int) -> Graph:
    if s < 1:
        raise ValueError("s must be at least 1")
    n = 3 * s + 5
    if n > max_vertices():
        raise GraphSizeError("make_bhat vertex count", n, max_vertices())
    xs = [5 + j for j in range(s)]
    ys = [5 + s + j for j in range(s)]
    zs = [5 + 2 * s + j for j in range(s)]
    edges = _c5_edges()
    for j in range(s):
        edges += [(xs[j], 4), (xs[j], 1)]  # B_1 sees v_5, v_2
        edges += [(ys[j], 0), (ys[j], 2)]  # B_2 sees v_1, v_3
        edges += [(xs[j], zs[j]), (ys[j], zs[j])]
        edges += [(xs[j], ys[k]) for k in range(s) if k != j]
    return Graph.from_edges(n, [tuple(sorted(e)) for e in edges])


def make_ht(t: int) -> Graph:
    if t < 1:
        raise ValueError("t must be at least 1")
    n = 5 * t + 5
    if n > max_vertices():
        raise GraphSizeError("make_ht vertex count", n, max_vertices())
    blocks = [[5 + k * t + j for j in range(t)] for k in range(5)]
    edges = _c5_edges()
    for k in range(5):
        for x in blocks[k]:
            edges += [(x, (k - 1) % 5), (x, (k + 1) % 5)]
            edges += [(x, y) for y in blocks[(k + 1) % 5]]
    return Graph.from_edges(n, {tuple(sorted(e)) for e in edges})


class GenerationExhausted(ParagliderError):
    def __init__(self, budget: int) -> None:
        super().__init__(f"no class member found within the retry budget of {budget} attempts")
        self.budget = budget


@dataclass(frozen=True)
class GenParams:
    seed: int = 1
    n_target: int = 20
    hA_range: tuple[int, int] = (0, 5)
    hB_range: tuple[int, int] = (0, 5)
    s2_range: tuple[int, int] = (0, 8)
    max_set: int | None = None  # cap on |B_j|; None derives it from n_target
    relabel: bool = True
    budget: int = RETRY_BUDGET

    def __post_init__(self) -> None:
        for name in ("hA_range", "hB_range"):
            lo, hi = getattr(self, name)
            if not 0 <= lo <= hi <= 5:
                raise ValueError(f"{name} must lie within 0..5")
        lo, hi = self.s2_range
        if not 0 <= lo <= hi:
            raise ValueError("bad s2_range")
        if not 5 <= self.n_target <= max_vertices():
            raise GraphSizeError("n_target", self.n_target, max_vertices())
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def _pick(rng: random.Random, lo: int, hi: int) -> int:
    return rng.randint(lo, hi) if lo <= hi else -1


def _regimes(p: GenParams) -> list[str]:
    out = ["general"]
    if p.hA_range[0] == 0 and p.hB_range[1] >= 4 and p.s2_range[0] == 0:
        out.append("b2")
    if p.hB_range[0] <= 2 <= p.hB_range[1] and p.s2_range[1] >= 1:
        out.append("b1")
    return out


def _sample_once(rng: random.Random, p: GenParams) -> Graph | None:
    regime = rng.choice(_regimes(p))
    budget = p.n_target - 5
    if regime == "b2":
        hA, hB, s2_lo, s2_hi = 0, rng.choice([k for k in (4, 5) if p.hB_range[0] <= k <= p.hB_range[1]]), 0, 0
    elif regime == "b1":
        hA = _pick(rng, p.hA_range[0], min(p.hA_range[1], 4))
        hB, s2_lo, s2_hi = 2, max(1, p.s2_range[0]), p.s2_range[1]
    else:
        hA = rng.randint(*p.hA_range)
        hB = rng.randint(*p.hB_range)
        s2_lo, s2_hi = p.s2_range
    if hA < 0:
        return None
    if regime == "b1":
        k0 = rng.randrange(5)
        b_idx = [k0, (k0 + 1) % 5]
        a_idx = sorted(rng.sample([k for k in range(5) if k != (k0 - 2) % 5], hA))
    else:
        a_idx = sorted(rng.sample(range(5), hA))
        b_idx = sorted(rng.sample(range(5), hB))
    budget -= hA
    small = (hA >= 1 and hB >= 4) or (regime == "general" and rng.random() < 0.3)
    sizes = [0] * 5
    if hB:
        cap = 1 if small else (p.max_set or max(1, budget // hB))
        for k in b_idx:
            sizes[k] = rng.randint(max(1, cap // 2), max(1, cap))
    while sum(sizes) > budget and max(sizes) > 1:
        sizes[sizes.index(max(sizes))] -= 1
    budget -= sum(sizes)
    hi = min(s2_hi, sum(sizes), budget)
    if hB == 0:
        hi = 0
    if s2_lo > hi:
        return None
    s2 = rng.randint(s2_lo, hi)
    if budget < 0:
        return None

    ids = iter(range(128))
    v = [next(ids) for _ in range(5)]
    A = {k: next(ids) for k in a_idx}
    B = {k: [next(ids) for _ in range(sizes[k])] for k in range(5)}
    Z = [next(ids) for _ in range(s2)]
    n = 5 + hA + sum(sizes) + s2

    edges = set()

    def add(x, y):
        edges.add((min(x, y), max(x, y)))

    for k in range(5):
        add(v[k], v[(k + 1) % 5])
        for x in B[k]:
            add(x, v[(k - 1) % 5])
            add(x, v[(k + 1) % 5])
    for k, x in A.items():
        add(x, v[k])
        if (k + 2) % 5 in A:
            add(x, A[(k + 2) % 5])
        for y in B[(k + 2) % 5] + B[(k - 2) % 5]:
            add(x, y)
    missing: dict[int, list[tuple[int, int]]] = {}
    for k in range(5):
        nxt = (k + 1) % 5
        if not (B[k] and B[nxt]):
            continue
        if (k + 3) % 5 in A or (small and rng.random() < 0.3):
            missing[k] = [(x, y) for x in B[k] for y in B[nxt]]
            continue
        # Complete bipartite minus a random partial matching.
        left, right = B[k][:], B[nxt][:]
        rng.shuffle(right)
        rate = 0.0 if rng.random() < 0.5 else rng.random() ** 2
        drop = [(x, y) for x, y in zip(left, right) if rng.random() < rate]
        missing[k] = drop
        for x in left:
            for y in right:
                if (x, y) not in drop:
                    add(x, y)
    # S2: each vertex takes at most one neighbor per B-set and each B vertex at
    # most one S2 neighbor; in the b1 regime, prefer the ends of missing pairs.
    used: set[int] = set()
    pairs = [e for k in missing for e in missing[k] if len(missing[k]) <= min(len(B[k]), len(B[(k + 1) % 5]))]
    rng.shuffle(pairs)
    for z in Z:
        if pairs and (regime == "b1" or rng.random() < 0.5):
            x, y = pairs.pop()
            if x not in used and y not in used:
                add(z, x)
                add(z, y)
                used |= {x, y}
                continue
        order = [k for k in range(5) if any(b not in used for b in B[k])]
        if not order:
            break
        rng.shuffle(order)
        chosen: list[int] = []
        for k in order[: rng.randint(1, len(order))]:
            options = [b for b in B[k] if b not in used and all((min(b, c), max(b, c)) not in edges for c in chosen)]
            if options:
                chosen.append(rng.choice(options))
        for b in chosen:
            add(z, b)
            used.add(b)
    perm = list(range(n))
    if p.relabel:
        rng.shuffle(perm)
    return Graph.from_edges(n, sorted((min(perm[x], perm[y]), max(perm[x], perm[y])) for x, y in edges))


def random_class_member(p: GenParams | None = None) -> Graph:
    """A random member of the class H, reproducible for a fixed ``GenParams``.

    Builds a cycle with A, B and S2 sets whose forced adjacencies follow
    the structural checks, randomizes the free choices, and rejects samples
    that fail ``in_class_H``.
    """
    p = p or GenParams()
    rng = random.Random(p.seed)
    for _ in range(p.budget):
        g = _sample_once(rng, p)
        if g is not None and in_class_H(g):
            return g
    raise GenerationExhausted(p.budget)
