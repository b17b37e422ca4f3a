"""Constructive clique covers and independent-set witnesses.

``build_cover`` partitions a {K3, P2uP3}-free graph H into cliques (edges and
single vertices), following a case split on the C5-rooted decomposition.
Each case names the matchings it uses and the independent sets that pay
for the cover; the result is checked against ``max{a+3, 2a-2}`` (and the
sharper bound for the two exceptional subclasses) before it is returned.

``color`` runs the same construction on the complement of a {3K1,
paraglider}-free graph G: cliques of H are independent sets of G.

Inside the case functions the decomposition has been reindexed so that
the case's pivot is index 0; ``d.v(-1)`` is the cycle vertex before it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .decompose import Decomposition, Label, classify, decompose, reindexings
from .errors import ClassViolation, InternalContradiction
from .exact import CLIQUE_CAP, bipartite_max_independent_set, independence_number, is_clique_cover
from .graph import Graph, bits, components, lowest, mask_of, max_matching, two_coloring
from .patterns import p2p3_witness, target_class_failure, triangle

BOUNDS: dict[str, Callable[[int], int]] = {
    "alpha": lambda a: a,
    "alpha+3": lambda a: a + 3,
    "2alpha-2": lambda a: 2 * a - 2,
    "3alpha/2-1": lambda a: 3 * a // 2 - 1,
}


def theorem_bound(alpha: int) -> int:
    return max(alpha + 3, 2 * alpha - 2)


# -- small matching helpers --------------------------------------------------

def bipartite_matching(h: Graph, left: int, right: int) -> list[tuple[int, int]]:
    """Maximum matching between disjoint vertex sets, as (left, right) pairs.

    Augmenting paths (Kuhn), scanning vertices in increasing id order so
    the result is reproducible.
    """
    mate_r: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in bits(h.adj[u] & right):
            if w in seen:
                continue
            seen.add(w)
            if w not in mate_r or augment(mate_r[w], seen):
                mate_r[w] = u
                return True
        return False

    for u in bits(left):
        augment(u, set())
    return sorted((u, w) for w, u in mate_r.items())


def optimal_block_cover(h: Graph, block: int) -> list[int]:
    """Minimum clique cover of H[block] (triangle-free, so pairs and singles)."""
    verts = list(bits(block))
    sub = h.induced(verts)
    parts = []
    used = 0
    for u, w in max_matching(sub):
        parts.append(1 << verts[u] | 1 << verts[w])
        used |= 1 << u | 1 << w
    parts.extend(1 << verts[x] for x in range(len(verts)) if not used >> x & 1)
    return parts


class _Builder:
    def __init__(self, h: Graph) -> None:
        self.h = h
        self.parts: list[int] = []
        self.covered = 0
        self.matchings: dict[str, list[tuple[int, int]]] = {}
        self.gaps: list[tuple[str, int, int]] = []

    def _add(self, part: int) -> None:
        if part & self.covered:
            raise InternalContradiction(f"cover part {sorted(bits(part))} overlaps earlier parts")
        self.parts.append(part)
        self.covered |= part

    def pair(self, u: int, w: int, name: str | None = None) -> None:
        if not self.h.has_edge(u, w):
            raise InternalContradiction(f"expected edge {u}-{w} is missing")
        self._add(1 << u | 1 << w)
        if name:
            self.matchings.setdefault(name, []).append((u, w))

    def matching(self, name: str, pairs: list[tuple[int, int]], need: int) -> None:
        # A short matching is recorded as a gap; the caller covers the
        # leftovers as singles and the bound is then settled with exact alpha.
        if len(pairs) < need:
            self.gaps.append((name, need, len(pairs)))
        for u, w in pairs[:need]:
            self.pair(u, w, name)

    def singles(self, mask: int) -> None:
        for v in bits(mask & ~self.covered):
            self._add(1 << v)

    def block(self, mask: int) -> None:
        for part in optimal_block_cover(self.h, mask & ~self.covered):
            self._add(part)


@dataclass
class _Case:
    case: str
    parts: list[int]
    alpha_sets: list[int]
    claimed: str
    sets: dict[str, list] = field(default_factory=dict)
    matchings: dict[str, list[tuple[int, int]]] = field(default_factory=dict)
    eq1: bool | None = None
    eq2: bool | None = None
    sharp_slack: int | None = None  # |R_i| in the B1 case
    gaps: list[tuple[str, int, int]] = field(default_factory=list)


def _anti(h: Graph, X: int, Y: int) -> bool:
    return not (h.neighborhood(X) & Y)


def _mset(m: int) -> list[int]:
    return sorted(bits(m))


def _bipartite_mis(h: Graph, P: int, Q: int) -> int:
    """Maximum independent set of H[P u Q] for independent sets P and Q."""
    verts = list(bits(P | Q))
    return mask_of(verts[x] for x in bits(bipartite_max_independent_set(h.induced(verts))))


def _finish(b: _Builder, case: str, alpha_sets, claimed: str, **kw) -> _Case:
    if b.gaps:
        b.singles(b.h.vertices)
    return _Case(case, b.parts, [s for s in alpha_sets if s], claimed, matchings=b.matchings, gaps=b.gaps, **kw)


# -- the cases (pivot at index 0) --------------------------------------------

def _case1(h: Graph, d: Decomposition):
    if d.h_B > 2 or d.b(-2) | d.b(-1) | d.b(1):
        return None
    X = d.b(0) | d.b(2) | d.vm(0, 2)
    b = _Builder(h)
    b.pair(d.v(0), d.v(-1), "M")
    b.pair(d.v(2), d.v(1), "M")
    b.matching("M", bipartite_matching(h, d.S2, d.b(0) | d.b(2)), d.S2.bit_count())
    b.singles(X)
    b.block(d.all_A | d.vm(-2))
    return _finish(b, "1", [X], "alpha+3")


def _case2_common(h: Graph, d: Decomposition):
    ns2 = h.neighborhood(d.S2)
    B0, B1 = d.b(0), d.b(1)
    L0, L1 = B0 & ns2, B1 & ns2
    R0, R1 = B0 & ~L0, B1 & ~L1
    M = [(x, y) for x in bits(L0) for y in bits(L1 & ~h.adj[x])]
    eq1 = 0 <= len(M) <= min(L0.bit_count(), L1.bit_count())
    eq2 = d.S2.bit_count() == (L0 | L1).bit_count() - len(M)
    X = [R0 | d.S2 | d.vm(0, 2) | A for A in (d.a(-1), d.a(1))]
    Y = [R1 | d.S2 | d.vm(1, -1) | A for A in (d.a(0), d.a(2))]
    # Pays for the vertices a short M_1 leaves behind.
    Y.append(_bipartite_mis(h, R0, R1) | d.S2 | d.vm(-2))
    sets = {"L_i": _mset(L0), "R_i": _mset(R0), "L_i+1": _mset(L1), "R_i+1": _mset(R1)}
    return L0, L1, R0, R1, M, eq1, eq2, X + Y, sets


def _is_case2(d: Decomposition) -> bool:
    return d.h_B == 2 and bool(d.b(0)) and bool(d.b(1))


def _case2_1(h: Graph, d: Decomposition, sub: str):
    if not _is_case2(d) or not d.S2 or _anti(h, d.b(0), d.b(1)):
        return None
    L0, L1, R0, R1, M, eq1, eq2, alpha_sets, sets = _case2_common(h, d)
    r0, r1, m = R0.bit_count(), R1.bit_count(), len(M)
    if r0 < r1:
        return None
    if (sub == "a") != (r0 >= r1 + m):
        return None
    sets["M"] = [list(e) for e in M]
    matched_l1 = mask_of(y for _, y in M)
    T = R1 | matched_l1
    b = _Builder(h)
    b.matching("M_S2", bipartite_matching(h, d.S2, L0 | (L1 & ~matched_l1)), d.S2.bit_count())
    if sub == "a":
        b.matching("M_1", bipartite_matching(h, T, R0), T.bit_count())
        b.singles(R0)
        b.pair(d.v(-1), d.v(0))
        b.pair(d.v(1), d.v(2))
        b.block(d.all_A | d.vm(-2))
        return _finish(b, "2.1a", alpha_sets, "alpha+3", sets=sets, eq1=eq1, eq2=eq2)
    b.matching("M_2", bipartite_matching(h, R0, T), r0)
    spare = T & ~b.covered
    if not spare:
        raise InternalContradiction("case 2.1b: no vertex of B_i+1 left for v_i")
    b.pair(d.v(0), lowest(spare))
    b.pair(d.v(-1), d.v(-2))
    b.pair(d.v(1), d.v(2))
    b.singles(spare)
    b.block(d.all_A)
    return _finish(b, "2.1b", alpha_sets, "2alpha-2", sets=sets, eq1=eq1, eq2=eq2, sharp_slack=r0)


def _case2_2(h: Graph, d: Decomposition):
    if not _is_case2(d) or d.S2 or _anti(h, d.b(0), d.b(1)):
        return None
    if d.b(0).bit_count() < d.b(1).bit_count():
        return None
    *_, eq1, eq2, alpha_sets, sets = _case2_common(h, d)
    b = _Builder(h)
    b.pair(d.v(0), d.v(-1), "M_3")
    b.pair(d.v(2), d.v(1), "M_3")
    b.matching("M_3", bipartite_matching(h, d.b(1), d.b(0)), d.b(1).bit_count())
    b.singles(d.b(0))
    b.block(d.all_A | d.vm(-2))
    return _finish(b, "2.2", alpha_sets, "alpha+3", sets=sets, eq1=eq1, eq2=eq2)


def _case2_3(h: Graph, d: Decomposition):
    if not _is_case2(d) or not _anti(h, d.b(0), d.b(1)):
        return None
    *_, eq1, eq2, alpha_sets, sets = _case2_common(h, d)
    if d.S2:
        alpha_sets.append(d.S2 | d.vm(0, 2) | d.a(-2))
    b = _Builder(h)
    b.block(d.S2 | d.b(0) | d.b(1) | d.s0)
    b.block(d.all_A)
    return _finish(b, "2.3", alpha_sets, "alpha+3", sets=sets, eq1=eq1, eq2=eq2)


def _is_case3(d: Decomposition) -> bool:
    return d.h_B == 3 and bool(d.b(0) and d.b(1) and d.b(2))


def _case3a(h: Graph, d: Decomposition, sub: str):
    if not _is_case3(d):
        return None
    zs = h.neighborhood(d.b(0) | d.b(2)) & d.S2
    if not zs:
        return None
    low = not (d.a(-2) | d.a(-1))
    if (sub == "i") != low:
        return None
    if zs.bit_count() != 1:
        raise InternalContradiction("case 3: B_i and B_i+2 see more than one S2 vertex")
    b = _Builder(h)
    if sub == "i":
        rest = d.S2 & ~zs
        Y = d.b(1) | d.vm(-2, 1)
        b.pair(d.v(0), d.v(1), "M")
        b.pair(d.v(2), d.v(-2), "M")
        b.matching("M", bipartite_matching(h, rest, d.b(1)), rest.bit_count())
        b.singles(Y)
        b.block(d.a(0) | d.a(1) | d.a(2) | zs | d.vm(-1) | d.b(0) | d.b(2))
        return _finish(b, "3a-i", [Y | d.a(0), Y | d.a(2)], "alpha+3")
    b.block(d.all_B | d.S2 | (d.s0 & ~d.vm(-1)))
    b.block(d.all_A | d.vm(-1))
    return _finish(b, "3a-ii", [d.b(0) | d.b(2) | d.vm(0, 2)], "alpha+3")


def _case3b(h: Graph, d: Decomposition, sub: str):
    if not _is_case3(d):
        return None
    if h.neighborhood(d.b(0) | d.b(2)) & d.S2:
        return None
    Xp = d.b(0) | d.b(2) | d.S2 | d.vm(0, 2)
    Y = d.b(1) | d.vm(-2, 1)
    joined = not _anti(h, d.b(0), d.b(1)) and not _anti(h, d.b(1), d.b(2))
    b = _Builder(h)
    if sub == "i":
        if joined:
            return None
        b.block(d.all_B | d.S2 | (d.s0 & ~d.vm(-1)))
        b.block(d.all_A | d.vm(-1))
        return _finish(b, "3b-i", [Xp, Y], "alpha+3")
    if not joined:
        return None
    n1 = d.b(1) & h.neighborhood(d.S2)
    free = d.b(1) & ~n1
    lonely = free.bit_count() == 1 and _anti(h, free, d.b(0) | d.b(2))
    if (sub == "ii-alpha") != lonely:
        return None
    b.matching("M_1", bipartite_matching(h, d.S2, n1), d.S2.bit_count())
    if lonely:
        b.block(d.b(0) | d.b(2) | free | (d.s0 & ~d.vm(-1)))
        b.block(d.all_A | d.vm(-1))
        return _finish(b, "3b-ii-alpha", [Xp, Y], "alpha+3")
    P = d.b(0) | d.b(2)
    Q, Qp = (P, free) if P.bit_count() >= free.bit_count() else (free, P)
    b.pair(d.v(0), d.v(1))
    b.pair(d.v(-2), d.v(2))
    b.matching("M_2", bipartite_matching(h, Qp, Q), Qp.bit_count())
    b.singles(Q)
    b.block(d.all_A | d.vm(-1))
    sets = {"Q": _mset(Q), "Q'": _mset(Qp)}
    return _finish(b, "3b-ii-beta", [Xp, Y], "alpha+3", sets=sets)


def _is_case4(d: Decomposition) -> bool:
    return bool(d.b(-1) and d.b(0) and d.b(2))


def _consecutive_gap(h: Graph, d: Decomposition) -> bool:
    return any(d.b(k) and d.b(k + 1) and _anti(h, d.b(k), d.b(k + 1)) for k in range(5))


def _case4a(h: Graph, d: Decomposition):
    if not _is_case4(d):
        return None
    if not (d.S2 or (d.h_B >= 4 and (_consecutive_gap(h, d) or d.h_A >= 1))):
        return None
    b = _Builder(h)
    b.block(h.vertices & ~(d.all_A | d.vm(0)))
    b.block(d.all_A | d.vm(0))
    sets = [
        d.b(-1) | d.b(2) | d.vm(-1, 2) | d.a(-2),
        d.b(0) | d.b(2) | d.vm(0, 2) | d.a(1),
        d.all_B,
    ]
    return _finish(b, "4a", sets, "alpha+3")


def _case4b(h: Graph, d: Decomposition, sub: str):
    if not _is_case4(d) or d.S2 or d.h_B != 3:
        return None
    if d.b(-1).bit_count() < d.b(0).bit_count():
        return None
    joined = not _anti(h, d.b(-1), d.b(0))
    if (sub == "i") != joined:
        return None
    X = d.b(-1) | d.b(2) | d.vm(-1, 2)
    b = _Builder(h)
    if joined:
        b.pair(d.v(0), d.v(-1), "M_1")
        b.pair(d.v(-2), d.v(2), "M_1")
        b.matching("M_1", bipartite_matching(h, d.b(0), d.b(-1)), d.b(0).bit_count())
        b.singles(X)
        b.block(d.all_A | d.vm(1))
        return _finish(b, "4b-i", [X], "alpha+3")
    b.pair(lowest(d.b(-1)), d.v(0))
    b.pair(lowest(d.b(0)), d.v(-1))
    b.pair(d.v(-2), d.v(2))
    b.pair(d.v(1), lowest(d.b(2)))
    b.singles(d.b(2) | d.b(-1) | d.b(0))
    b.block(d.all_A)
    return _finish(b, "4b-ii", [X], "alpha+3")


def _case4c(h: Graph, d: Decomposition):
    if not _is_case4(d) or d.S2 or d.h_B < 4 or d.h_A or _consecutive_gap(h, d):
        return None
    if not d.b(-2):
        return None
    sizes = [m.bit_count() for m in d.B]
    if d.h_B == 5 and d.b(1).bit_count() != min(sizes):
        return None
    Z = d.b(0) | d.b(-2)
    X = d.b(-1) | d.b(2)
    if Z.bit_count() < X.bit_count():
        return None
    b = _Builder(h)
    if d.b(-2).bit_count() >= d.b(2).bit_count():
        b.matching("M_2", bipartite_matching(h, X, Z), X.bit_count())
        b.singles(Z)
    else:
        W = d.b(0) | d.b(2)
        src = d.b(-2) | d.b(-1)
        b.matching("M_3", bipartite_matching(h, src, W), src.bit_count())
        b.singles(W)
    alpha_sets = [
        X | d.vm(-1, 2),
        d.b(0) | d.vm(0, -2),
        Z | d.vm(0, -2),
        d.b(0) | d.b(2) | d.vm(0, 2),
    ]
    if d.h_B == 4:
        b.block(d.s0)
        return _finish(b, "4c", alpha_sets, "alpha+3")
    b.pair(d.v(0), lowest(d.b(1)))
    b.singles(d.b(1))
    b.pair(d.v(1), d.v(2))
    b.pair(d.v(-2), d.v(-1))
    return _finish(b, "4c-B2", alpha_sets, "3alpha/2-1")


CASES: tuple[tuple[str, Callable], ...] = (
    ("1", _case1),
    ("2.1a", lambda h, d: _case2_1(h, d, "a")),
    ("2.1b", lambda h, d: _case2_1(h, d, "b")),
    ("2.2", _case2_2),
    ("2.3", _case2_3),
    ("3a-i", lambda h, d: _case3a(h, d, "i")),
    ("3a-ii", lambda h, d: _case3a(h, d, "ii")),
    ("3b-i", lambda h, d: _case3b(h, d, "i")),
    ("3b-ii-alpha", lambda h, d: _case3b(h, d, "ii-alpha")),
    ("3b-ii-beta", lambda h, d: _case3b(h, d, "ii-beta")),
    ("4a", _case4a),
    ("4b-i", lambda h, d: _case4b(h, d, "i")),
    ("4b-ii", lambda h, d: _case4b(h, d, "ii")),
    ("4c", _case4c),
)


# -- public types ------------------------------------------------------------

@dataclass(frozen=True)
class CliqueCover:
    parts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.parts)

    def as_lists(self) -> list[list[int]]:
        return [_mset(p) for p in self.parts]


@dataclass
class CoverTrace:
    case: str
    rotation: tuple[int, bool] | None = None
    label: str | None = None
    claimed: str = "alpha+3"
    alpha: int = 0
    alpha_source: str = "witness"
    alpha_set: int = 0
    bound: int = 0
    size: int = 0
    sets: dict[str, list] = field(default_factory=dict)
    matchings: dict[str, list[tuple[int, int]]] = field(default_factory=dict)
    eq1: bool | None = None
    eq2: bool | None = None
    sharper_bound: int | None = None
    gaps: list[tuple[str, int, int]] = field(default_factory=list)
    inner: CoverTrace | None = None
    isolated: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "case": self.case,
            "rotation": list(self.rotation) if self.rotation else None,
            "label": self.label,
            "claimed": self.claimed,
            "alpha": self.alpha,
            "alpha_source": self.alpha_source,
            "bound": self.bound,
            "size": self.size,
        }
        if self.sets:
            out["sets"] = self.sets
        if self.matchings:
            out["matchings"] = {k: [list(e) for e in v] for k, v in self.matchings.items()}
        if self.eq1 is not None:
            out["eq1"] = self.eq1
            out["eq2"] = self.eq2
        if self.sharper_bound is not None:
            out["sharper_bound"] = self.sharper_bound
        if self.gaps:
            out["gaps"] = [list(g) for g in self.gaps]
        if self.isolated:
            out["isolated"] = self.isolated
        if self.inner is not None:
            out["inner"] = self.inner.to_dict()
        return out

    def to_text(self) -> str:
        lines = []
        for key, value in self.to_dict().items():
            if key == "inner":
                lines.extend("inner." + line for line in self.inner.to_text().splitlines())
            else:
                lines.append(f"{key}: {value}")
        return "\n".join(lines)


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def count(self) -> int:
        return max(self.colors, default=-1) + 1

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.count)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out


# -- build_cover ---------------------------------------------------------------

def _check_input(h: Graph) -> None:
    t = triangle(h)
    if t is not None:
        raise ClassViolation("contains K3", t)
    w = p2p3_witness(h)
    if w is not None:
        raise ClassViolation("contains P2uP3", w)


def _settle_alpha(h: Graph, trace: CoverTrace, alpha_sets) -> None:
    """Fix trace.alpha from the proof's independent sets, falling back to the exact value."""
    best = 0
    for s in alpha_sets:
        if not h.is_independent(s):
            raise InternalContradiction(f"set {_mset(s)} used for the bound is not independent")
        if s.bit_count() > best.bit_count():
            best = s
    trace.alpha, trace.alpha_set, trace.alpha_source = best.bit_count(), best, "witness"
    limit = BOUNDS[trace.claimed]
    if trace.size > limit(trace.alpha) or trace.size > theorem_bound(trace.alpha):
        if h.n > CLIQUE_CAP:
            raise InternalContradiction(
                f"cover of size {trace.size} not justified by witness alpha {trace.alpha} and n exceeds the exact cap"
            )
        trace.alpha = independence_number(h)
        trace.alpha_source = "exact"
    trace.bound = limit(trace.alpha)
    if trace.size > trace.bound or trace.size > theorem_bound(trace.alpha):
        raise InternalContradiction(f"cover of size {trace.size} exceeds {trace.claimed} with alpha={trace.alpha}")


def _cover_connected(h: Graph, d: Decomposition | None = None) -> tuple[list[int], CoverTrace]:
    if d is None:
        d = decompose(h, check_class=False)
    label = classify(h, d).label.value
    for name, fn in CASES:
        for rot, view in reindexings(d):
            res = fn(h, view)
            if res is None:
                continue
            trace = CoverTrace(
                case=res.case,
                rotation=rot,
                label=label,
                claimed=res.claimed,
                size=len(res.parts),
                sets=res.sets,
                matchings=res.matchings,
                eq1=res.eq1,
                eq2=res.eq2,
                gaps=res.gaps,
            )
            if res.eq1 is False or res.eq2 is False:
                raise InternalContradiction(f"case {res.case}: counting identity for M fails")
            if not is_clique_cover(h, res.parts):
                raise InternalContradiction(f"case {res.case} produced an invalid cover")
            _settle_alpha(h, trace, res.alpha_sets)
            if res.sharp_slack is not None:
                trace.sharper_bound = 2 * trace.alpha - 2 - res.sharp_slack
            return sorted(res.parts, key=lowest), trace
    raise InternalContradiction("no case of the cover construction applies")


def build_cover(h: Graph, d: Decomposition | None = None) -> tuple[CliqueCover, CoverTrace]:
    """A clique cover of a {K3, P2uP3}-free graph with the size guarantee.

    ``d`` pins the rooting C5 when h is connected and imperfect; by default
    the canonical one from ``decompose`` is used.
    """
    _check_input(h)
    if two_coloring(h) is not None:
        matching = max_matching(h)
        used = mask_of(v for e in matching for v in e)
        parts = sorted([1 << u | 1 << w for u, w in matching] + [1 << v for v in bits(h.vertices & ~used)], key=lowest)
        indep = bipartite_max_independent_set(h, matching)
        trace = CoverTrace(case="perfect", claimed="alpha", size=len(parts), matchings={"maximum": matching})
        _settle_alpha(h, trace, [indep])
        return CliqueCover(tuple(parts)), trace
    comps = components(h)
    big = [c for c in comps if c.bit_count() > 1]
    if len(big) != 1:
        # the odd component has a P3; a second one would add the P2
        raise ClassViolation("more than one non-trivial component", tuple(lowest(c) for c in big))
    if len(comps) == 1:
        parts, trace = _cover_connected(h, d)
        return CliqueCover(tuple(parts)), trace
    verts = list(bits(big[0]))
    inner_parts, inner = _cover_connected(h.induced(verts))
    isolated = h.vertices & ~big[0]
    parts = [mask_of(verts[x] for x in bits(p)) for p in inner_parts]
    parts += [1 << v for v in bits(isolated)]
    parts.sort(key=lowest)
    trace = CoverTrace(
        case="disconnected",
        label=inner.label,
        claimed=inner.claimed,
        size=len(parts),
        inner=inner,
        isolated=_mset(isolated),
    )
    lifted = mask_of(verts[x] for x in bits(inner.alpha_set)) | isolated
    _settle_alpha(h, trace, [lifted])
    if not is_clique_cover(h, parts):
        raise InternalContradiction("lifted cover is invalid")
    return CliqueCover(tuple(parts)), trace


@dataclass(frozen=True)
class C5Probe:
    c5: tuple[int, ...]
    size: int | None
    case: str | None
    within_bound: bool | None
    error: str | None = None


def cover_over_all_c5s(h: Graph) -> list[C5Probe]:
    """Run the construction once per induced C5 of a class member (experimental).

    Nothing is asserted about the outcome: a probe that fails its bound or
    hits an internal contradiction is reported, not raised.
    """
    from .decompose import all_decompositions

    alpha = independence_number(h) if h.n <= CLIQUE_CAP else None
    out = []
    for d in all_decompositions(h):
        try:
            cover, trace = build_cover(h, d)
        except InternalContradiction as exc:
            out.append(C5Probe(d.c5, None, None, None, str(exc)))
            continue
        within = None if alpha is None else len(cover) <= BOUNDS[trace.claimed](alpha)
        out.append(C5Probe(d.c5, len(cover), trace.case, within))
    return out


def color(g: Graph) -> tuple[Coloring, CoverTrace]:
    """Color a {3K1, paraglider}-free graph with at most max{w+3, 2w-2} colors."""
    fail = target_class_failure(g)
    if fail is not None:
        raise ClassViolation(*fail)
    cover, trace = build_cover(g.complement())
    colors = [0] * g.n
    for c, part in enumerate(cover.parts):
        for v in bits(part):
            colors[v] = c
    coloring = Coloring(tuple(colors))
    if any(colors[u] == colors[w] for u, w in g.edges()):
        raise InternalContradiction("coloring is not proper")
    return coloring, trace


# -- independent-set witness ---------------------------------------------------

@dataclass(frozen=True)
class WitnessTriple:
    sets: tuple[int, ...]
    case: str
    rotation: tuple[int, bool] | None
    best: int
    partition: bool

    @property
    def largest(self) -> int:
        return self.best.bit_count()

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "rotation": list(self.rotation) if self.rotation else None,
            "sets": [_mset(s) for s in self.sets],
            "best": _mset(self.best),
            "size": self.largest,
            "partition": self.partition,
        }


def _witness_branches(h: Graph, d: Decomposition):
    """Yield (tag, sets) for every branch whose precondition holds at this index."""
    hB = d.h_B
    B = d.b
    if hB <= 2 and not (B(-2) | B(-1) | B(1)):
        yield "2.1", (
            B(0) | B(2) | d.vm(0, 2) | d.a(1),
            d.a(-2) | d.a(2) | d.S2 | d.vm(-1, 1),
            d.a(-1) | d.a(0) | d.vm(-2),
        )
    if hB == 2 and B(0) and B(1):
        if _anti(h, B(0), B(1)):
            yield "2.2", (
                B(0) | B(1) | d.vm(-2) | d.a(0) | d.a(1),
                d.a(-2) | d.a(2) | d.S2 | d.vm(-1, 1),
                d.a(-1) | d.vm(0, 2),
            )
        else:
            yield "2.3", (
                B(0) | d.a(-1) | d.vm(0, 2),
                B(1) | d.a(2) | d.vm(-2, 1),
                d.a(0) | d.a(1) | d.S2 | d.vm(-1),
            )
    if hB == 3 and B(0) and B(1) and B(2):
        yield "3.1", (
            B(0) | B(2) | d.vm(0, 2) | d.a(1),
            B(1) | d.a(0) | d.vm(-2),
            d.a(-2) | d.a(2) | d.S2 | d.vm(-1, 1),
        )
    if hB == 3 and B(-2) and B(0) and B(2):
        if d.a(-2) | d.a(0) | d.a(2):
            yield "3.2", (B(-2) | B(2) | d.vm(0) | d.a(-2) | d.a(2),)
        else:
            yield "3.3", (
                B(0) | B(2) | d.vm(0, 2) | d.a(1),
                B(-2) | d.a(-1) | d.vm(-2, 1),
                d.S2 | d.vm(-1),
            )
    if hB == 4 and not B(0):
        yield "4.1", (
            B(-2) | B(1) | d.vm(-2, 1) | d.a(2),
            B(-1) | B(2) | d.vm(-1, 2) | d.a(-2),
            d.S2 | d.vm(0),
        )
    if hB == 5:
        if not d.S2 and d.h_A == 0:
            yield "5.1", (
                B(-2) | B(1) | d.vm(-2, 1),
                B(-1) | B(2) | d.vm(-1, 2),
                B(0) | d.vm(0),
            )
        else:
            yield "5.2", (d.all_B,)


def _extra_sets(d: Decomposition) -> list[int]:
    # Sets the case analysis appeals to when h_A or S2 is large.
    return [d.a(j) | d.a(j + 1) | d.S2 | d.vm(j - 1, j + 2) for j in range(5)]


def witness_independent_set(h: Graph, d: Decomposition) -> WitnessTriple:
    """Independent sets certifying alpha(H) >= (n-1)/3 for a member of the class."""
    first = None
    best = 0
    for rot, view in reindexings(d):
        for tag, sets in _witness_branches(h, view):
            for s in sets:
                if s and not h.is_independent(s):
                    raise InternalContradiction(f"branch {tag} set {_mset(s)} is not independent")
            if first is None:
                first = (tag, rot, sets)
            for s in sets:
                if s.bit_count() > best.bit_count():
                    best = s
        for s in _extra_sets(view):
            if h.is_independent(s) and s.bit_count() > best.bit_count():
                best = s
    if first is None:
        raise InternalContradiction("no witness branch applies")
    tag, rot, sets = first
    union = 0
    disjoint = True
    for s in sets:
        disjoint &= not (union & s)
        union |= s
    if not disjoint:
        raise InternalContradiction(f"branch {tag} sets overlap")
    n = h.n
    size = best.bit_count()
    if 3 * size < n:
        from .families import make_hstar
        from .patterns import is_isomorphic

        if 3 * size != n - 1 or not is_isomorphic(h, make_hstar()):
            raise InternalContradiction(f"largest witness set has size {size} < n/3 with n={n}")
    return WitnessTriple(tuple(sets), tag, rot, best, union == h.vertices)


def independent_set_witness(h: Graph) -> int:
    """A large independent set of any {K3, P2uP3}-free graph (a clique of its complement)."""
    _check_input(h)
    if two_coloring(h) is not None:
        return bipartite_max_independent_set(h)
    comps = components(h)
    big = [c for c in comps if c.bit_count() > 1]
    if len(big) != 1:
        raise ClassViolation("more than one non-trivial component", tuple(lowest(c) for c in big))
    verts = list(bits(big[0]))
    sub = h.induced(verts)
    w = witness_independent_set(sub, decompose(sub, check_class=False))
    return mask_of(verts[x] for x in bits(w.best)) | (h.vertices & ~big[0])
