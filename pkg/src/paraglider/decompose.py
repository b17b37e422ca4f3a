"""C5-rooted decomposition of imperfect connected {K3, P2uP3}-free graphs.

Given an induced cycle v_1..v_5, every other vertex x at distance one from
the cycle sees either one cycle vertex (x in A_i when that vertex is v_i)
or two cycle vertices at distance two (x in B_i when they are v_{i-1} and
v_{i+1}).  Vertices at distance two form S2; nothing is further away.

Indices in code are 0-based: position ``k`` of ``c5``, ``A`` and ``B``
stands for v_{k+1}, A_{k+1}, B_{k+1}.  All index arithmetic is mod 5.
Reports print the 1-based names.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import ClassViolation, MalformedStructure
from .graph import Graph, bits, lowest, mask_of, shortest_odd_cycle
from .patterns import class_H_failure

REINDEXINGS: tuple[tuple[int, bool], ...] = tuple((r, False) for r in range(5)) + tuple(
    (r, True) for r in range(5)
)


@dataclass(frozen=True)
class Decomposition:
    c5: tuple[int, ...]
    A: tuple[int, ...]
    B: tuple[int, ...]
    S2: int
    n: int = 0

    def v(self, k: int) -> int:
        return self.c5[k % 5]

    def vm(self, *ks: int) -> int:
        """Mask of the cycle vertices at the given positions."""
        m = 0
        for k in ks:
            m |= 1 << self.c5[k % 5]
        return m

    def a(self, k: int) -> int:
        return self.A[k % 5]

    def b(self, k: int) -> int:
        return self.B[k % 5]

    @property
    def s0(self) -> int:
        return mask_of(self.c5)

    @property
    def h_A(self) -> int:
        return sum(1 for m in self.A if m)

    @property
    def h_B(self) -> int:
        return sum(1 for m in self.B if m)

    @property
    def all_A(self) -> int:
        return self.A[0] | self.A[1] | self.A[2] | self.A[3] | self.A[4]

    @property
    def all_B(self) -> int:
        return self.B[0] | self.B[1] | self.B[2] | self.B[3] | self.B[4]

    def summary(self) -> dict:
        return {
            "c5": list(self.c5),
            "A": [sorted(bits(m)) for m in self.A],
            "B": [sorted(bits(m)) for m in self.B],
            "S2": sorted(bits(self.S2)),
            "h_A": self.h_A,
            "h_B": self.h_B,
        }


def reindex(d: Decomposition, r: int, reflect: bool = False) -> Decomposition:
    """Relabel the cycle: new v_j is old v_{r+j} (or old v_{r-j} when reflected).

    A and B sets follow their cycle vertex, so the result is again a valid
    decomposition of the same graph.
    """
    sigma = [(r - j) % 5 if reflect else (r + j) % 5 for j in range(5)]
    return Decomposition(
        c5=tuple(d.c5[s] for s in sigma),
        A=tuple(d.A[s] for s in sigma),
        B=tuple(d.B[s] for s in sigma),
        S2=d.S2,
        n=d.n,
    )


def reindexings(d: Decomposition) -> Iterator[tuple[tuple[int, bool], Decomposition]]:
    for r, reflect in REINDEXINGS:
        yield (r, reflect), reindex(d, r, reflect)


def normalize_cycle(cycle) -> tuple[int, ...]:
    """Rotate/reflect so the smallest id comes first, followed by its smaller neighbor."""
    cycle = list(cycle)
    k = cycle.index(min(cycle))
    cycle = cycle[k:] + cycle[:k]
    if cycle[-1] < cycle[1]:
        cycle = [cycle[0]] + cycle[:0:-1]
    return tuple(cycle)


def decompose_on(h: Graph, c5) -> Decomposition:
    """Classify all vertices relative to the given induced C5 (in cyclic order)."""
    c5 = tuple(c5)
    if len(c5) != 5 or len(set(c5)) != 5:
        raise ValueError("need five distinct cycle vertices")
    for k in range(5):
        for j in range(k + 1, 5):
            adjacent = h.has_edge(c5[k], c5[j])
            if adjacent != ((j - k) % 5 in (1, 4)):
                raise ValueError(f"{list(c5)} is not an induced C5 in cyclic order")
    pos = {v: k for k, v in enumerate(c5)}
    s0 = mask_of(c5)
    A = [0] * 5
    B = [0] * 5
    s1 = h.neighborhood(s0) & ~s0
    for x in bits(s1):
        seen = sorted(pos[y] for y in bits(h.adj[x] & s0))
        if len(seen) == 1:
            A[seen[0]] |= 1 << x
        elif len(seen) == 2 and (seen[1] - seen[0]) in (2, 3):
            # {k-1, k+1} for the k opposite the gap
            k = (seen[0] + 1) % 5 if seen[1] - seen[0] == 2 else (seen[1] + 1) % 5
            B[k] |= 1 << x
        else:
            raise MalformedStructure(f"vertex {x} sees cycle vertices {[c5[s] for s in seen]}")
    s2 = h.neighborhood(s1) & ~s1 & ~s0
    rest = h.vertices & ~(s0 | s1 | s2)
    if rest:
        raise MalformedStructure(f"vertex {lowest(rest)} is more than two steps from the cycle")
    return Decomposition(c5=c5, A=tuple(A), B=tuple(B), S2=s2, n=h.n)


def decompose(h: Graph, check_class: bool = True) -> Decomposition:
    """Decompose around the canonical C5 (the normalized shortest odd cycle)."""
    if check_class:
        fail = class_H_failure(h)
        if fail is not None:
            raise ClassViolation(*fail)
    cycle = shortest_odd_cycle(h)
    if cycle is None or len(cycle) != 5:
        raise MalformedStructure(f"shortest odd cycle is {cycle!r}, expected a C5")
    return decompose_on(h, normalize_cycle(cycle))


def induced_c5s(h: Graph) -> list[tuple[int, ...]]:
    """All induced 5-cycles, each normalized once."""
    found = []
    adj = h.adj
    for s in range(h.n):
        above = h.vertices & ~((2 << s) - 1)
        for a in bits(adj[s] & above):
            for b in bits(adj[a] & above & ~adj[s]):
                for c in bits(adj[b] & above & ~adj[s] & ~adj[a]):
                    for d in bits(adj[c] & adj[s] & above & ~adj[a] & ~adj[b]):
                        if a < d:
                            found.append((s, a, b, c, d))
    return found


def all_decompositions(h: Graph) -> list[Decomposition]:
    """One decomposition per induced C5; for experiments on C5 choice."""
    return [decompose_on(h, c) for c in induced_c5s(h)]


# -- structural audit --------------------------------------------------------

class Status(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    PRECONDITION_NOT_MET = "precondition-not-met"


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    status: Status
    witness: tuple[int, ...] = ()
    detail: str = ""


@dataclass(frozen=True)
class StructureReport:
    checks: tuple[PropertyCheck, ...]

    @property
    def violations(self) -> list[PropertyCheck]:
        return [c for c in self.checks if c.status is Status.VIOLATED]

    @property
    def ok(self) -> bool:
        return not self.violations

    def get(self, name: str) -> PropertyCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.name}: {c.status.value}"
            if c.witness:
                line += " witness=" + ",".join(map(str, c.witness))
            if c.detail:
                line += f" ({c.detail})"
            lines.append(line)
        return "\n".join(lines)


class _Fail(Exception):
    def __init__(self, witness, detail: str = "") -> None:
        super().__init__(detail)
        self.witness = tuple(witness)
        self.detail = detail


def _edge_between(h: Graph, X: int, Y: int) -> tuple[int, int] | None:
    for x in bits(X):
        row = h.adj[x] & Y
        if row:
            return (x, lowest(row))
    return None


def _non_edge_between(h: Graph, X: int, Y: int) -> tuple[int, int] | None:
    for x in bits(X):
        miss = Y & ~h.adj[x] & ~(1 << x)
        if miss:
            return (x, lowest(miss))
    return None


def _anti(h: Graph, X: int, Y: int, detail: str) -> None:
    e = _edge_between(h, X, Y)
    if e is not None:
        raise _Fail(e, detail)


def _complete(h: Graph, X: int, Y: int, detail: str) -> None:
    e = _non_edge_between(h, X, Y)
    if e is not None:
        raise _Fail(e, detail)


def _nb(h: Graph, X: int) -> int:
    return h.neighborhood(X)


def _bset_conclusion(h: Graph, d: Decomposition) -> None:
    """|B_j| <= 1 for all j, union of B independent, |S2| <= 1, S2 complete to union B."""
    for k in range(5):
        if d.B[k].bit_count() > 1:
            raise _Fail(tuple(bits(d.B[k]))[:2], f"|B{k + 1}| > 1")
    allb = d.all_B
    for x in bits(allb):
        if h.adj[x] & allb:
            raise _Fail((x, lowest(h.adj[x] & allb)), "union of B not independent")
    if d.S2.bit_count() > 1:
        raise _Fail(tuple(bits(d.S2))[:2], "|S2| > 1")
    _complete(h, d.S2, allb, "S2 not complete to union of B")


def _checks(h: Graph, d: Decomposition):
    """Yield (name, precondition_met_any, callable raising _Fail) per property."""
    A, B, S2 = d.A, d.B, d.S2
    hA, hB = d.h_A, d.h_B

    def each(fn):
        def run():
            for k in range(5):
                fn(k)
        return run

    def p1(k):
        if A[k].bit_count() > 1:
            raise _Fail(tuple(bits(A[k]))[:2], f"|A{k + 1}| > 1")

    def p2(k):
        e = _edge_between(h, B[k], B[k])
        if e:
            raise _Fail(e, f"edge inside B{k + 1}")

    def p3(k):
        _anti(h, A[k], A[(k + 1) % 5], f"A{k + 1} ~ A{(k + 1) % 5 + 1}")
        _complete(h, A[k], A[(k + 2) % 5], f"A{k + 1} not complete to A{(k + 2) % 5 + 1}")

    def p4(k):
        _anti(h, A[k], B[k], f"A{k + 1} ~ B{k + 1}")
        _complete(h, A[k], B[(k - 2) % 5] | B[(k + 2) % 5], f"A{k + 1} not complete to B{(k - 2) % 5 + 1} u B{(k + 2) % 5 + 1}")

    def p5(k):
        _anti(h, A[k], B[(k - 1) % 5] | B[(k + 1) % 5], f"A{k + 1} ~ B{(k - 1) % 5 + 1} u B{(k + 1) % 5 + 1}")

    def p6(k):
        _anti(h, B[k], B[(k + 2) % 5], f"B{k + 1} ~ B{(k + 2) % 5 + 1}")

    def p7(k):
        for j in ((k - 1) % 5, (k + 1) % 5):
            for b in bits(B[k]):
                if (h.adj[b] & B[j]).bit_count() < B[j].bit_count() - 1:
                    raise _Fail((b,) + tuple(bits(B[j] & ~h.adj[b]))[:2], f"vertex of B{k + 1} misses two of B{j + 1}")

    def p8(k):
        if A[k]:
            _anti(h, B[(k - 2) % 5], B[(k + 2) % 5], f"A{k + 1} nonempty but B{(k - 2) % 5 + 1} ~ B{(k + 2) % 5 + 1}")

    def p9():
        e = _edge_between(h, S2, S2)
        if e:
            raise _Fail(e, "edge inside S2")
        s1 = d.all_A | d.all_B
        covered = d.s0 | s1 | S2
        if covered != h.vertices:
            raise _Fail((lowest(h.vertices & ~covered),), "vertex outside S0 u S1 u S2")
        for z in bits(S2):
            if not h.adj[z] & s1 or h.adj[z] & d.s0:
                raise _Fail((z,), "S2 vertex not at distance two")

    def p10(k):
        _anti(h, A[k], S2, f"A{k + 1} ~ S2")

    def p11(k):
        for z in bits(S2):
            hit = h.adj[z] & B[k]
            if hit.bit_count() > 1:
                raise _Fail((z,) + tuple(bits(hit))[:2], f"S2 vertex with two neighbors in B{k + 1}")
        for y in bits(B[k]):
            hit = h.adj[y] & S2
            if hit.bit_count() > 1:
                raise _Fail((y,) + tuple(bits(hit))[:2], f"B{k + 1} vertex with two neighbors in S2")
        if k == 4 and d.all_B.bit_count() < S2.bit_count():
            raise _Fail((), "fewer B vertices than S2 vertices")

    yield "P1", True, each(p1)
    yield "P2", True, each(p2)
    yield "P3", True, each(p3)
    yield "P4", True, each(p4)
    yield "P5", True, each(p5)
    yield "P6", True, each(p6)
    yield "P7", True, each(p7)
    yield "P8", hA > 0, each(p8)
    yield "P9", True, p9
    yield "P10", True, each(p10)
    yield "P11", True, each(p11)

    # The L3.2 clauses all need S2 nonempty.
    def l32_1_pre(k):
        return S2 and B[k] and B[(k + 2) % 5] and _edge_between(h, B[k] | B[(k + 2) % 5], S2)

    def l32_1():
        for k in range(5):
            if not l32_1_pre(k):
                continue
            bi, bj = B[k], B[(k + 2) % 5]
            if bi.bit_count() != 1 or bj.bit_count() != 1:
                raise _Fail(tuple(bits(bi | bj)), f"|B{k + 1}| or |B{(k + 2) % 5 + 1}| is not 1")
            ni, nj = _nb(h, bi) & S2, _nb(h, bj) & S2
            if ni != nj or ni.bit_count() != 1:
                raise _Fail(tuple(bits(bi | bj | ni | nj)), "S2 neighborhoods differ")

    yield "L3.2(1)", any(l32_1_pre(k) for k in range(5)), l32_1

    def l32_2_pairs():
        for k in range(5):
            for x in bits(B[k]):
                for y in bits(B[(k + 1) % 5] & ~h.adj[x]):
                    yield x, y

    def l32_2():
        for x, y in l32_2_pairs():
            nx, ny = h.adj[x] & S2, h.adj[y] & S2
            if not (nx == 0 and ny == 0) and not (nx == ny and nx.bit_count() == 1):
                raise _Fail((x, y) + tuple(bits(nx | ny)), "non-adjacent B pair with differing S2 neighbors")

    yield "L3.2(2)", bool(S2) and any(True for _ in l32_2_pairs()), l32_2

    def l32_3_pre():
        if not S2:
            return False
        for k in range(5):
            if hB == 2 and B[k] and B[(k + 2) % 5]:
                return True
            if B[(k - 1) % 5] and B[k] and B[(k + 2) % 5]:
                return True
        return False

    def l32_3():
        _bset_conclusion(h, d)
        if S2.bit_count() != 1:
            raise _Fail(tuple(bits(S2)), "|S2| != 1")

    yield "L3.2(3)", l32_3_pre(), l32_3

    def l33_1_pre():
        return hB == 2 and any(
            B[(k - 1) % 5] and B[k] and not _edge_between(h, B[(k - 1) % 5], B[k]) for k in range(5)
        )

    def l33_2_pre():
        for k in range(5):
            p, c, n_ = B[(k - 1) % 5], B[k], B[(k + 1) % 5]
            if p and c and n_ and (not _edge_between(h, p, c) or not _edge_between(h, c, n_)):
                return True
        return False

    yield "L3.3(1)", l33_1_pre(), lambda: _bset_conclusion(h, d)
    yield "L3.3(2)", l33_2_pre(), lambda: _bset_conclusion(h, d)

    def l34_pre(k):
        if not (B[k] and B[(k + 2) % 5]):
            return False
        return bool(A[k] | A[(k + 2) % 5]) or bool(A[(k - 2) % 5] and A[(k - 1) % 5])

    def l34():
        for k in range(5):
            if l34_pre(k):
                for j in (k, (k + 2) % 5):
                    if B[j].bit_count() != 1:
                        raise _Fail(tuple(bits(B[j]))[:2], f"|B{j + 1}| != 1")

    yield "L3.4", any(l34_pre(k) for k in range(5)), l34

    l35_1 = hB == 2 and hA >= 3 and any(B[k] and B[(k + 2) % 5] for k in range(5))
    l35_2 = hB == 3 and any(
        B[(k - 2) % 5] and B[k] and B[(k + 2) % 5] and (A[(k - 2) % 5] | A[k] | A[(k + 2) % 5]) for k in range(5)
    )
    l35_3 = hB >= 4 and hA >= 1
    yield "L3.5(1)", l35_1, lambda: _bset_conclusion(h, d)
    yield "L3.5(2)", l35_2, lambda: _bset_conclusion(h, d)
    yield "L3.5(3)", l35_3, lambda: _bset_conclusion(h, d)


def validate_structure(h: Graph, d: Decomposition) -> StructureReport:
    """Evaluate every named structural check (P1-P11, L3.x clauses) from raw adjacency."""
    out = []
    for name, pre, check in _checks(h, d):
        if not pre:
            out.append(PropertyCheck(name, Status.PRECONDITION_NOT_MET))
            continue
        try:
            check()
        except _Fail as f:
            out.append(PropertyCheck(name, Status.VIOLATED, f.witness, f.detail))
        else:
            out.append(PropertyCheck(name, Status.HOLDS))
    return StructureReport(tuple(out))


# -- exceptional subclasses --------------------------------------------------

class Label(str, Enum):
    B1 = "B1"
    B2 = "B2"
    OTHER = "other"


@dataclass(frozen=True)
class Classification:
    label: Label
    index: int | None = None  # 0-based k for B1: the pair B_k, B_{k+1}
    missing: tuple[tuple[int, int], ...] = ()
    deficits: tuple[int, int] = (0, 0)


def b1_data(h: Graph, d: Decomposition, k: int):
    """The B1 bullets at index k; returns (ok, missing pairs, (|R_k|, |R_{k+1}|))."""
    if d.h_B != 2 or not d.S2:
        return False, (), (0, 0)
    bi, bj = d.b(k), d.b(k + 1)
    if not (bi and bj) or _edge_between(h, bi, bj) is None or d.a(k - 2):
        return False, (), (0, 0)
    ns2 = h.neighborhood(d.S2)
    li, lj = bi & ns2, bj & ns2
    missing = tuple((x, y) for x in bits(li) for y in bits(lj & ~h.adj[x]))
    ri, rj = (bi & ~ns2).bit_count(), (bj & ~ns2).bit_count()
    ok = bool(missing) and abs(ri - rj) < len(missing)
    return ok, missing, (ri, rj)


def is_b2(h: Graph, d: Decomposition) -> bool:
    if d.S2 or d.h_A != 0 or d.h_B != 5:
        return False
    return all(_edge_between(h, d.b(k), d.b(k + 1)) is not None for k in range(5))


def classify(h: Graph, d: Decomposition) -> Classification:
    for k in range(5):
        ok, missing, deficits = b1_data(h, d, k)
        if ok:
            return Classification(Label.B1, k, missing, deficits)
    if is_b2(h, d):
        return Classification(Label.B2)
    return Classification(Label.OTHER)
