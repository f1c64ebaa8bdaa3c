"""The rewriting system on words over X_M.

A word is a tuple of class ids.  One step rewrites ``u[m,x][m,y]v`` to
``u[m,xy]v`` for any representatives of the two adjacent letters sharing
the same monoid coordinate, so a pair of letters can have several reducts.
Those letter-pair reducts are tabulated once per partition; everything
else is built from that table.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .algebra_core import SizeCapError
from .mx_quotient import MXPartition, classes_generic
from .partial_action import PartialAction

DEFAULT_WORD_CAP = 10 ** 6
DEFAULT_MAX_LEN = 6
DEFAULT_MAX_VISITED = 10 ** 5


class ConfluenceCapError(SizeCapError):
    pass


def _partition(obj) -> MXPartition:
    if isinstance(obj, MXPartition):
        return obj
    if isinstance(obj, PartialAction):
        return classes_generic(obj)
    if isinstance(obj, RewritingSystem):
        return obj.P
    raise TypeError(f"expected a partial action or partition, got {type(obj).__name__}")


class RewritingSystem:
    def __init__(self, P: MXPartition):
        self.P = P
        self._pair = {}
        self._reducts = {}
        self._closure = {}

    # -- letters ----------------------------------------------------------

    def pair_reducts(self, a: int, b: int) -> frozenset:
        """Classes of ``(m, xy)`` over shared-m representatives of ``a`` and ``b``."""
        key = (a, b)
        r = self._pair.get(key)
        if r is None:
            P = self.P
            t = P.carrier.table
            nx = P.carrier.n
            ra, rb = P.by_m[a], P.by_m[b]
            out = set()
            for m, xs in ra.items():
                ys = rb.get(m)
                if ys:
                    base = m * nx
                    for x in xs:
                        tx = t[x]
                        for y in ys:
                            out.add(P.class_of[base + tx[y]])
            r = self._pair[key] = frozenset(out)
        return r

    def pair_table(self) -> dict:
        """Every letter pair with a nonempty reduct set."""
        n = self.P.n_classes
        return {(a, b): r for a in range(n) for b in range(n) if (r := self.pair_reducts(a, b))}

    # -- words ------------------------------------------------------------

    def one_step_reducts(self, w) -> frozenset:
        w = tuple(w)
        r = self._reducts.get(w)
        if r is None:
            out = set()
            for i in range(len(w) - 1):
                for c in self.pair_reducts(w[i], w[i + 1]):
                    out.add(w[:i] + (c,) + w[i + 2:])
            r = self._reducts[w] = frozenset(out)
        return r

    def all_reducts(self, w) -> frozenset:
        """Reflexive-transitive closure of one-step reduction."""
        w = tuple(w)
        r = self._closure.get(w)
        if r is None:
            out = {w}
            for v in self.one_step_reducts(w):
                out |= self.all_reducts(v)
            r = self._closure[w] = frozenset(out)
        return r

    def normal_forms(self, w) -> frozenset:
        return frozenset(v for v in self.all_reducts(w) if not self.one_step_reducts(v))

    def is_normal_form(self, w) -> bool:
        return not self.one_step_reducts(w)

    def joinable(self, w1, w2) -> bool:
        w1, w2 = tuple(w1), tuple(w2)
        if w1 == w2:
            return True
        return not self.all_reducts(w1).isdisjoint(self.all_reducts(w2))

    def normalize(self, w) -> tuple:
        """Leftmost reduction, taking the least reduct class at each step.

        Letters are pushed onto a stack that is kept in normal form, so the
        pair at the top is always the leftmost reducible one.
        """
        pr = self.pair_reducts
        out = []
        for c in w:
            while out:
                r = pr(out[-1], c)
                if not r:
                    break
                c = min(r)
                out.pop()
            out.append(c)
        return tuple(out)

    def normalize_naive(self, w) -> tuple:
        """Leftmost reduction by rescanning from the start after every step."""
        w = tuple(w)
        while True:
            for i in range(len(w) - 1):
                r = self.pair_reducts(w[i], w[i + 1])
                if r:
                    w = w[:i] + (min(r),) + w[i + 2:]
                    break
            else:
                return w

    # -- words as text ----------------------------------------------------

    def word_name(self, w) -> str:
        return "".join(self.P.class_name(c) for c in w)


def system(obj) -> RewritingSystem:
    if isinstance(obj, RewritingSystem):
        return obj
    return RewritingSystem(_partition(obj))


def one_step_reducts(obj, w):
    return system(obj).one_step_reducts(w)


def all_reducts(obj, w):
    return system(obj).all_reducts(w)


def normal_forms(obj, w):
    return system(obj).normal_forms(w)


def joinable(obj, w1, w2) -> bool:
    return system(obj).joinable(w1, w2)


# -- local confluence -------------------------------------------------------

@dataclass
class ConfluenceVerdict:
    locally_confluent: bool
    witness: tuple | None = None  # (w, w1, w2)
    words_checked: int = 0

    def __bool__(self):
        return self.locally_confluent


def _first_unjoinable(rs: RewritingSystem, reducts):
    """Least pair of one-step reducts (sorted order) that is not joinable."""
    rs_sorted = sorted(reducts)
    for u, v in itertools.combinations(rs_sorted, 2):
        if not rs.joinable(u, v):
            return u, v
    return None


def is_locally_confluent(obj, cap: int | None = None) -> ConfluenceVerdict:
    """Decide local confluence from the words of length 2 and 3.

    Words are swept in increasing length, then lexicographically by class
    ids; the witness is the first failing word and its least unjoinable
    pair of reducts.
    """
    rs = system(obj)
    n = rs.P.n_classes
    cap = DEFAULT_WORD_CAP if cap is None else cap
    if n ** 3 > cap:
        raise ConfluenceCapError(f"|X_M|^3 = {n ** 3} candidate words exceeds cap {cap}")
    R = rs.pair_table()
    checked = 0
    for (a, b), r in sorted(R.items()):
        checked += 1
        if len(r) > 1:
            lo = sorted(r)
            return ConfluenceVerdict(False, ((a, b), (lo[0],), (lo[1],)), checked)
    right = [[] for _ in range(n)]
    for a, b in R:
        right[a].append(b)
    for lst in right:
        lst.sort()
    allc = range(n)
    empty = frozenset()
    for a in allc:
        for b in allc:
            rab = R.get((a, b), empty)
            cs = allc if rab else right[b]
            for c in cs:
                rbc = R.get((b, c), empty)
                k = len(rab) + len(rbc)
                if k < 2:
                    continue
                checked += 1
                reducts = {(r, c) for r in rab} | {(a, s) for s in rbc}
                if len(reducts) < 2:
                    continue
                bad = None
                for u, v in itertools.combinations(sorted(reducts), 2):
                    ru = R.get(u, empty)
                    rv = R.get(v, empty)
                    if ru.isdisjoint(rv):
                        bad = (u, v)
                        break
                if bad is not None:
                    return ConfluenceVerdict(False, ((a, b, c), bad[0], bad[1]), checked)
    return ConfluenceVerdict(True, None, checked)


# -- bounded equivalence ------------------------------------------------------

EQUIVALENT = "equivalent"
NOT_WITHIN_BOUNDS = "not_within_bounds"


@dataclass
class BoundedResult:
    status: str
    chain: list = field(default_factory=list)
    visited: int = 0

    @property
    def equivalent(self) -> bool:
        return self.status == EQUIVALENT


class _Expander:
    """Inverse of the letter-pair table: ``c -> [(a, b) : c ∈ R(a, b)]``."""

    def __init__(self, rs: RewritingSystem):
        inv = {}
        for (a, b), r in sorted(rs.pair_table().items()):
            for c in r:
                inv.setdefault(c, []).append((a, b))
        self.inv = inv

    def expansions(self, w):
        out = []
        for i, c in enumerate(w):
            for a, b in self.inv.get(c, ()):
                out.append(w[:i] + (a, b) + w[i + 1:])
        return out


def _bfs(rs, ex, start, is_goal, max_len, max_visited):
    """Level-synchronous search over ↔; reductions of a level before expansions."""
    parent = {start: None}
    if is_goal(start):
        return start, parent
    frontier = [start]
    while frontier:
        nxt = []
        for gen in (lambda u: sorted(rs.one_step_reducts(u)), ex.expansions):
            for u in frontier:
                for v in gen(u):
                    if v in parent or len(v) > max_len:
                        continue
                    parent[v] = u
                    if is_goal(v):
                        return v, parent
                    if len(parent) >= max_visited:
                        return None, parent
                    nxt.append(v)
        frontier = nxt
    return None, parent


def _chain(parent, end):
    out = []
    while end is not None:
        out.append(end)
        end = parent[end]
    return out[::-1]


def equivalent_bounded(obj, w1, w2, max_len: int = DEFAULT_MAX_LEN,
                       max_visited: int = DEFAULT_MAX_VISITED) -> BoundedResult:
    """Search for ``w1 ↔* w2`` through words of length at most ``max_len``.

    Three-valued by design: failing to find a chain never means the words
    are inequivalent.
    """
    if max_len < 1 or max_visited < 1:
        raise ValueError("bounds must be positive")
    rs = system(obj)
    w1, w2 = tuple(w1), tuple(w2)
    end, parent = _bfs(rs, _Expander(rs), w1, lambda v: v == w2, max_len, max_visited)
    if end is None:
        return BoundedResult(NOT_WITHIN_BOUNDS, [], len(parent))
    return BoundedResult(EQUIVALENT, _chain(parent, end), len(parent))


HOLDS = "holds"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"


@dataclass
class UniqueNFResult:
    status: str
    source: int | None = None  # class [e, y]
    target: int | None = None  # class [m, x] ≠ source
    chain: list = field(default_factory=list)
    reason: str = ""


def unique_nf_condition(obj, max_len: int = DEFAULT_MAX_LEN, max_visited: int = DEFAULT_MAX_VISITED,
                        cap: int | None = None) -> UniqueNFResult:
    """Whether ``[m,x] ↔* [e,y]`` forces ``[m,x] = [e,y]``.

    Local confluence settles it positively.  Otherwise one bounded search
    runs from each distinct class ``[e,y]``, targeting any other one-letter
    word; this covers every pair ``([m,x], [e,y])`` at once.
    """
    rs = system(obj)
    if is_locally_confluent(rs, cap=cap).locally_confluent:
        return UniqueNFResult(HOLDS, reason="locally confluent")
    ex = _Expander(rs)
    for s in sorted(set(rs.P.iota)):
        start = (s,)
        end, parent = _bfs(rs, ex, start, lambda v, s=s: len(v) == 1 and v[0] != s, max_len, max_visited)
        if end is not None:
            return UniqueNFResult(VIOLATED, s, end[0], _chain(parent, end))
    return UniqueNFResult(INCONCLUSIVE, reason=f"no chain within max_len={max_len}, max_visited={max_visited}")


# -- DOT --------------------------------------------------------------------

def reduct_graph_dot(obj, w) -> str:
    rs = system(obj)
    w = tuple(w)
    nodes = sorted(rs.all_reducts(w), key=lambda v: (-len(v), v))
    ids = {v: f"n{i}" for i, v in enumerate(nodes)}
    lines = ["digraph reducts {"]
    for v in nodes:
        shape = "doublecircle" if rs.is_normal_form(v) else "ellipse"
        lines.append(f'  {ids[v]} [label="{rs.word_name(v)}", shape={shape}];')
    for v in nodes:
        for u in sorted(rs.one_step_reducts(v)):
            lines.append(f"  {ids[v]} -> {ids[u]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
