"""Odd clique minors at tiny scale and certificates for oh(G) >= chi(G).

An odd K_t model is t disjoint vertex sets with a 2-coloring such that each
set is connected through bichromatic edges and every two sets are joined by
a monochromatic edge.  The searcher fixes a coloring, then grows the sets
one at a time in order of their smallest vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import BudgetExceeded
from .exact import CLIQUE_CAP, max_clique
from .graph import Graph, bits, lowest, max_matching
from .patterns import PatternName, has_induced, is_quasi_line, is_target_class

MINOR_MAX_N = 12
MINOR_MAX_T = 6

# R(3, k+1) <= 4k for k <= 7 and <= 4k - 1 for k <= 6, as (k_max, offset) pairs.
RAMSEY_FACTS: tuple[tuple[int, int], ...] = ((7, 0), (6, 1))


def ramsey_upper(k: int) -> int | None:
    """The stored upper bound on R(3, k+1), or None when no fact covers k."""
    best = None
    for k_max, offset in RAMSEY_FACTS:
        if 1 <= k <= k_max:
            value = 4 * k - offset
            best = value if best is None else min(best, value)
    return best


@dataclass(frozen=True)
class OddMinorModel:
    trees: tuple[int, ...]
    coloring: dict[int, int]
    tree_edges: tuple[tuple[tuple[int, int], ...], ...]
    connectors: dict[tuple[int, int], tuple[int, int]]

    @property
    def t(self) -> int:
        return len(self.trees)

    def validate(self, g: Graph) -> bool:
        seen = 0
        for tree, edges in zip(self.trees, self.tree_edges):
            if not tree or tree & seen or tree & ~g.vertices:
                return False
            seen |= tree
            if len(edges) != tree.bit_count() - 1:
                return False
            reach = 1 << lowest(tree)
            for _ in range(len(edges)):
                for u, v in edges:
                    if reach >> u & 1 or reach >> v & 1:
                        reach |= 1 << u | 1 << v
            if reach != tree:
                return False
            for u, v in edges:
                if not g.has_edge(u, v) or self.coloring[u] == self.coloring[v]:
                    return False
                if not (tree >> u & 1 and tree >> v & 1):
                    return False
        if set(self.coloring) != set(bits(seen)):
            return False
        for i in range(self.t):
            for j in range(i + 1, self.t):
                e = self.connectors.get((i, j))
                if e is None:
                    return False
                u, v = e
                if not (self.trees[i] >> u & 1 and self.trees[j] >> v & 1):
                    return False
                if not g.has_edge(u, v) or self.coloring[u] != self.coloring[v]:
                    return False
        return True

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "trees": [sorted(bits(s)) for s in self.trees],
            "coloring": {str(v): c for v, c in sorted(self.coloring.items())},
            "tree_edges": [[list(e) for e in edges] for edges in self.tree_edges],
            "connectors": {f"{i}-{j}": list(e) for (i, j), e in sorted(self.connectors.items())},
        }


def _connected_sets(root: int, allowed: int, nb: list[int]):
    """Every subset of ``allowed`` containing ``root`` and connected in ``nb``, once each."""

    def rec(S: int, cand: int, excl: int):
        yield S
        while cand:
            v = lowest(cand)
            cand &= ~(1 << v)
            yield from rec(S | 1 << v, (cand | nb[v]) & allowed & ~S & ~(1 << v) & ~excl, excl)
            excl |= 1 << v

    yield from rec(1 << root, nb[root] & allowed, 0)


def _spanning_edges(tree: int, nb: list[int]) -> tuple[tuple[int, int], ...]:
    root = lowest(tree)
    reach = 1 << root
    frontier = [root]
    out = []
    while frontier:
        u = frontier.pop(0)
        for v in bits(nb[u] & tree & ~reach):
            reach |= 1 << v
            out.append((min(u, v), max(u, v)))
            frontier.append(v)
    return tuple(out)


def _build_model(g: Graph, sets: list[int], color_mask: int, bi: list[int], mono: list[int]) -> OddMinorModel:
    coloring = {v: color_mask >> v & 1 for s in sets for v in bits(s)}
    connectors = {}
    for i, a in enumerate(sets):
        for j in range(i + 1, len(sets)):
            b = sets[j]
            edge = min((u, v) for u in bits(a) for v in bits(mono[u] & b))
            connectors[(i, j)] = edge
    return OddMinorModel(tuple(sets), coloring, tuple(_spanning_edges(s, bi) for s in sets), connectors)


def _search(g: Graph, t: int) -> OddMinorModel | None:
    n = g.n
    if t <= 0:
        return OddMinorModel((), {}, (), {})
    if t > n:
        return None
    clique = max_clique(g)
    if clique.bit_count() >= t:
        singles = [1 << v for v in list(bits(clique))[:t]]
        nb = [0] * n
        return _build_model(g, singles, 0, nb, list(g.adj))
    adj = g.adj
    full = g.vertices
    # Swapping the two colors maps models to models, so vertex n-1 stays color 0.
    for color_mask in range(1 << (n - 1)):
        bi = [adj[v] & (color_mask if not color_mask >> v & 1 else ~color_mask & full) for v in range(n)]
        mono = [adj[v] & ~bi[v] for v in range(n)]
        sets: list[int] = []
        monos: list[int] = []

        def grow(used: int, last_root: int) -> bool:
            need = t - len(sets)
            if need == 0:
                return True
            for r in range(last_root + 1, n):
                if used >> r & 1:
                    continue
                allowed = full & ~used & ~((1 << r) - 1)
                if allowed.bit_count() < need:
                    return False
                for S in _connected_sets(r, allowed, bi):
                    if (allowed & ~S).bit_count() < need - 1:
                        continue
                    if any(not (m & S) for m in monos):
                        continue
                    reach = 0
                    for v in bits(S):
                        reach |= mono[v]
                    sets.append(S)
                    monos.append(reach)
                    if grow(used | S, r):
                        return True
                    sets.pop()
                    monos.pop()
            return False

        if grow(0, -1):
            return _build_model(g, list(sets), color_mask, bi, mono)
    return None


def _guard_n(g: Graph) -> None:
    if g.n > MINOR_MAX_N:
        raise BudgetExceeded("odd clique minor", g.n, MINOR_MAX_N)


def has_odd_clique_minor(g: Graph, t: int) -> tuple[bool, OddMinorModel | None]:
    """Whether g has an odd K_t minor, with a validated model when it does."""
    _guard_n(g)
    if t > MINOR_MAX_T:
        raise BudgetExceeded("odd clique minor order t", t, MINOR_MAX_T)
    model = _search(g, t)
    if model is None:
        return False, None
    if not model.validate(g):
        raise AssertionError("odd minor search produced an invalid model")
    return True, model


def oh_small(g: Graph) -> int:
    """The largest t with an odd K_t minor (n <= 12).

    Starts from the clique number, so unlike ``has_odd_clique_minor`` it
    is not limited to t <= 6.
    """
    _guard_n(g)
    t = max_clique(g).bit_count()
    while t < g.n and _search(g, t + 1) is not None:
        t += 1
    return t


# -- certificates --------------------------------------------------------------

class Rule(str, Enum):
    LEMMA_2_3 = "Lemma2.3"
    THM_1_6 = "Thm1.6"
    THM_1_7 = "Thm1.7"
    THM_1_9 = "Thm1.9"
    QUASI_LINE = "Cor6.3-quasi-line"
    HOUSE_FREE = "Cor6.3-house-free"
    W4_FREE = "Cor6.3-W4-free"
    NONE = "none"


RULE_ORDER = (
    Rule.LEMMA_2_3,
    Rule.THM_1_6,
    Rule.THM_1_7,
    Rule.THM_1_9,
    Rule.QUASI_LINE,
    Rule.HOUSE_FREE,
    Rule.W4_FREE,
)


@dataclass
class Certificate:
    rule: Rule
    facts: dict = field(default_factory=dict)
    applicable: list[Rule] = field(default_factory=list)
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "rule": self.rule.value,
            "applicable": [r.value for r in self.applicable],
            "reason": self.reason,
            "facts": self.facts,
        }

    def to_text(self) -> str:
        lines = [f"rule: {self.rule.value}", f"applicable: {', '.join(r.value for r in self.applicable) or '-'}"]
        if self.reason:
            lines.append(f"reason: {self.reason}")
        lines += [f"{k}: {v}" for k, v in self.facts.items()]
        return "\n".join(lines)


def _rule_holds(rule: Rule, f: dict) -> bool:
    n, w, chi, even = f["n"], f["omega"], f["chi"], f["n_even"]
    if rule is Rule.LEMMA_2_3:
        return (w <= 7 or n <= 32) if even else (w <= 6 or n <= 25)
    if rule is Rule.THM_1_6:
        return 4 * w >= n if even else 4 * w >= n + 3
    if rule is Rule.THM_1_7:
        return chi <= 2 * w if even else 5 * chi <= 9 * w
    if rule is Rule.THM_1_9:
        return f["paraglider_free"]
    if rule is Rule.QUASI_LINE:
        return f["quasi_line"]
    if rule is Rule.HOUSE_FREE:
        return f["house_free"]
    if rule is Rule.W4_FREE:
        return f["W4_free"]
    return False


def certificate_facts(g: Graph) -> dict:
    """Every quantity a certificate may rely on, computed from scratch."""
    if g.n > CLIQUE_CAP:
        raise BudgetExceeded("omega", g.n, CLIQUE_CAP)
    h = g.complement()
    alpha = max_clique(h).bit_count()
    facts = {"n": g.n, "n_even": g.n % 2 == 0, "alpha": alpha}
    if alpha > 2:
        return facts
    omega = max_clique(g).bit_count()
    facts.update(
        omega=omega,
        # alpha <= 2 makes the complement triangle-free, so chi = n - mu(complement).
        chi=g.n - len(max_matching(h)),
        paraglider_free=is_target_class(g),
        quasi_line=is_quasi_line(g),
        house_free=not has_induced(PatternName.HOUSE, g),
        W4_free=not has_induced(PatternName.W4, g),
        ramsey_bound=ramsey_upper(omega),
    )
    return facts


def certify_conjecture(g: Graph) -> Certificate:
    """Name the first result whose hypotheses g meets, in a fixed order."""
    facts = certificate_facts(g)
    if facts["alpha"] > 2:
        return Certificate(Rule.NONE, facts, [], "alpha > 2")
    applicable = [r for r in RULE_ORDER if _rule_holds(r, facts)]
    if not applicable:
        return Certificate(Rule.NONE, facts, [], "no stored hypothesis applies")
    return Certificate(applicable[0], facts, applicable)
