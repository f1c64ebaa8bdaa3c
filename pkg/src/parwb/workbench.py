"""Exhaustive enumeration of small partial actions, brute-force oracles and fixtures.

The enumerator assigns the partial maps of the non-identity monoid elements
in index order, drawing each from a pre-filtered candidate list (domain a
subsemigroup, map a homomorphism), and checks the axioms for a pair
``m, n`` as soon as ``α_m``, ``α_n`` and ``α_{nm}`` are all assigned.
Candidates are ordered by (domain bitmask, values), so the stream order is
reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra_core import (
    FiniteMonoid,
    FiniteSemigroup,
    SizeCapError,
    cyclic_group,
    direct_product,
    g0_structure,
    ideal_witness,
    is_unital_ideal,
    left_zero,
    make_g0,
    mult_mod,
    multiples_mod,
    null,
    power,
)
from .mx_quotient import MXPartition, classes_generic
from .partial_action import GlobalAction, PartialAction, is_strong_partial_action

FILTERS = ("ideal", "unital", "g0", "global")
DEFAULT_ENUM_CAP = (4, 4)  # (|M|, |X|)


@dataclass(frozen=True)
class EnumConfig:
    filters: tuple = ()
    max_monoid: int = DEFAULT_ENUM_CAP[0]
    max_carrier: int = DEFAULT_ENUM_CAP[1]


def _bits(mask, n):
    return [x for x in range(n) if mask >> x & 1]


def candidate_maps(X: FiniteSemigroup, filters=()) -> list:
    """Partial endomorphisms of X with subsemigroup domain, in canonical order."""
    n = X.n
    t = X.table
    want_ideal = "ideal" in filters
    want_unital = "unital" in filters
    total_only = "global" in filters
    out = []
    masks = [(1 << n) - 1] if total_only else range(1 << n)
    for mask in masks:
        D = _bits(mask, n)
        Ds = frozenset(D)
        if any(t[x][y] not in Ds for x in D for y in D):
            continue
        if want_ideal and ideal_witness(X, Ds) is not None:
            continue
        if want_unital and not is_unital_ideal(X, Ds)[0]:
            continue
        for vals in itertools.product(range(n), repeat=len(D)):
            f = dict(zip(D, vals))
            if any(f[t[x][y]] != t[f[x]][f[y]] for x in D for y in D):
                continue
            if want_ideal or want_unital:
                im = frozenset(vals)
                if want_ideal and ideal_witness(X, im) is not None:
                    continue
                if want_unital and not is_unital_ideal(X, im)[0]:
                    continue
            out.append(tuple(f.get(x) for x in range(n)))
    return out


def _pair_ok(M, maps, a, b, n):
    """Strong PA2 and PA3 for ``α_b ∘ α_a`` against ``α_{ba}``."""
    am, bm, cm = maps[a], maps[b], maps[M.mul(b, a)]
    for x in range(n):
        y = am[x]
        lhs = y is not None and bm[y] is not None
        rhs = y is not None and cm[x] is not None
        if lhs != rhs:
            return False
        if lhs and bm[y] != cm[x]:
            return False
    return True


def enumerate_partial_actions(M: FiniteMonoid, X: FiniteSemigroup, filters=(), cap=DEFAULT_ENUM_CAP):
    """Every strong partial action of M on X passing the filters.

    ``filters`` may contain ``ideal`` (all domains and images ideals),
    ``unital`` (all unital ideals), ``g0`` (M must be G^0, otherwise nothing
    is produced) and ``global`` (total maps only).
    """
    filters = tuple(filters)
    bad = set(filters) - set(FILTERS)
    if bad:
        raise ValueError(f"unknown filters {sorted(bad)}")
    if cap is not None and (M.n > cap[0] or X.n > cap[1]):
        raise SizeCapError(f"enumeration limited to |M| <= {cap[0]}, |X| <= {cap[1]}")
    if "g0" in filters and g0_structure(M) is None:
        return
    n = X.n
    e = M.identity
    ident = tuple(range(n))
    if "ideal" in filters or "unital" in filters:
        # the identity's domain and image are X itself
        if "unital" in filters and not is_unital_ideal(X, frozenset(ident))[0]:
            return
    cands = candidate_maps(X, filters)
    order = [m for m in range(M.n) if m != e]
    pos = {e: -1}
    for i, m in enumerate(order):
        pos[m] = i
    # constraints become checkable at the step where the last of a, b, ba is set
    checks = [[] for _ in order]
    for a in range(M.n):
        for b in range(M.n):
            step = max(pos[a], pos[b], pos[M.mul(b, a)])
            if step >= 0:
                checks[step].append((a, b))
    maps = [None] * M.n
    maps[e] = ident

    def rec(i):
        if i == len(order):
            yield PartialAction(M, X, tuple(maps))
            return
        m = order[i]
        for f in cands:
            maps[m] = f
            if all(_pair_ok(M, maps, a, b, n) for a, b in checks[i]):
                yield from rec(i + 1)
        maps[m] = None

    yield from rec(0)


def enumerate_global_actions(M: FiniteMonoid, X: FiniteSemigroup, cap=DEFAULT_ENUM_CAP):
    for a in enumerate_partial_actions(M, X, ("global",), cap=cap):
        yield GlobalAction(M, X, a.maps)


def count_partial_actions_slow(M: FiniteMonoid, X: FiniteSemigroup) -> int:
    """Recount by filtering every family of partial maps through the validator."""
    n = X.n
    row_space = list(itertools.product([None, *range(n)], repeat=n))
    count = 0
    for rows in itertools.product(row_space, repeat=M.n):
        if is_strong_partial_action(M, X, rows):
            count += 1
    return count


def partial_actions_slow(M: FiniteMonoid, X: FiniteSemigroup):
    n = X.n
    row_space = list(itertools.product([None, *range(n)], repeat=n))
    for rows in itertools.product(row_space, repeat=M.n):
        if is_strong_partial_action(M, X, rows):
            yield PartialAction(M, X, rows)


# -- oracle -----------------------------------------------------------------------

def oracle_local_confluence(alpha: PartialAction, max_len: int = 4, cap: int = 10 ** 6,
                            P: MXPartition | None = None) -> bool:
    """Local confluence straight from the definition, on all words up to max_len.

    Reducts are found by scanning representatives of adjacent letters and
    closed under reduction by depth-first search; nothing is shared with
    the rewriting module.
    """
    P = P or classes_generic(alpha)
    nc = P.n_classes
    if nc ** max_len > cap:
        raise SizeCapError(f"{nc}^{max_len} words exceeds cap {cap}")
    X = alpha.carrier
    nx = X.n
    members = P.members
    cls = P.class_of
    t = X.table
    step_memo = {}

    def step(w):
        r = step_memo.get(w)
        if r is not None:
            return r
        out = set()
        for i in range(len(w) - 1):
            for m, x in members[w[i]]:
                for m2, y in members[w[i + 1]]:
                    if m == m2:
                        out.add(w[:i] + (cls[m * nx + t[x][y]],) + w[i + 2:])
        r = step_memo[w] = out
        return r

    closure_memo = {}

    def closure(w):
        r = closure_memo.get(w)
        if r is not None:
            return r
        seen = {w}
        stack = [w]
        while stack:
            u = stack.pop()
            for v in step(u):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        closure_memo[w] = seen
        return seen

    for L in range(2, max_len + 1):
        for w in itertools.product(range(nc), repeat=L):
            rs = sorted(step(w))
            for u, v in itertools.combinations(rs, 2):
                if closure(u).isdisjoint(closure(v)):
                    return False
    return True


# -- fixtures ------------------------------------------------------------------------

def monoid_c2_zero() -> FiniteMonoid:
    return make_g0(cyclic_group(2))


def monoid_one_zero() -> FiniteMonoid:
    return make_g0(cyclic_group(1))


def _swap_index(X, k, coords):
    """Index permutation swapping the first two coordinates of a product with base k."""
    out = []
    for x in range(X.n):
        digits = []
        v = x
        for _ in range(coords):
            digits.append(v % k)
            v //= k
        digits = digits[::-1]
        digits[0], digits[1] = digits[1], digits[0]
        y = 0
        for d in digits:
            y = y * k + d
        out.append(y)
    return tuple(out)


def fixture_ex1() -> PartialAction:
    """C2^0 on the even part of (Z/8)^2; α_g swaps, dom α_0 empty."""
    M = monoid_c2_zero()
    X = direct_product(multiples_mod(8, 2), multiples_mod(8, 2))
    n = X.n
    return PartialAction(M, X, (tuple(range(n)), _swap_index(X, 4, 2), (None,) * n))


def ex1_hand_globalization():
    """C2^0 on (Z/8)^2 with β_g the swap and β_0 constant (1,1); ι the inclusion."""
    M = monoid_c2_zero()
    Z = power(mult_mod(8), 2)
    n = Z.n
    one = Z.index("(1,1)")
    beta = GlobalAction(M, Z, (tuple(range(n)), _swap_index(Z, 8, 2), (one,) * n))
    X = fixture_ex1().carrier
    iota = tuple(Z.index(name) for name in X.elements)
    return beta, iota


def fixture_ex2() -> PartialAction:
    """C2^0 on (Z/4)^3; α_g swaps the first two coordinates, α_0 = id on {0}×{0}×Z/4."""
    M = monoid_c2_zero()
    X = power(mult_mod(4), 3)
    n = X.n
    a0 = tuple(x if x < 4 else None for x in range(n))
    return PartialAction(M, X, (tuple(range(n)), _swap_index(X, 4, 3), a0))


def fixture_ex3():
    """Strict upper-triangular 3×3 over F_2; dom α_0 = ⟨E13, E23⟩, α_0(E13) = E13, α_0(E23) = 0."""
    from .falgebra import LinearPA01, strict_upper_triangular_3x3

    A = strict_upper_triangular_3x3(2)
    return LinearPA01(A, ((0, 1, 0), (0, 0, 1)), ((0, 1, 0), (0, 0, 0)))


def fixture_ex3_semigroup() -> PartialAction:
    from .falgebra import semigroup_view

    return semigroup_view(fixture_ex3())


def fixture_ex4() -> PartialAction:
    """{1,0} on Z/6 with dom α_0 = im α_0 = {0,2,4} (unit 4), α_0 the identity there."""
    M = monoid_one_zero()
    X = mult_mod(6)
    a0 = tuple(x if x % 2 == 0 else None for x in range(6))
    return PartialAction(M, X, (tuple(range(6)), a0))


def fixture_lz_pos() -> PartialAction:
    """C2^0 on the left-zero semigroup {a,b}; α_g swaps, dom α_0 empty."""
    M = monoid_c2_zero()
    X = left_zero(2)
    return PartialAction(M, X, ((0, 1), (1, 0), (None, None)))


def fixture_lz_neg() -> PartialAction:
    """C2 on the left-zero semigroup {a,b}; dom α_g = {a}, α_g(a) = a."""
    X = left_zero(2)
    return PartialAction(cyclic_group(2).base, X, ((0, 1), (0, None)))


def fixture_lz_01() -> PartialAction:
    """{1,0} on the left-zero semigroup {a,b} with dom α_0 empty."""
    return PartialAction(monoid_one_zero(), left_zero(2), ((0, 1), (None, None)))


def fixture_null(k: int = 3) -> PartialAction:
    """C2^0 on null(k): α_g swaps the first two nonzero elements, α_0 ≡ 0."""
    M = monoid_c2_zero()
    X = null(k)
    sw = list(range(k))
    if k >= 3:
        sw[1], sw[2] = sw[2], sw[1]
    return PartialAction(M, X, (tuple(range(k)), tuple(sw), (0,) * k))


def fixture_registry() -> dict:
    return {
        "EX1": fixture_ex1(),
        "EX2": fixture_ex2(),
        "EX3": fixture_ex3(),
        "EX3-semigroup": fixture_ex3_semigroup(),
        "EX4": fixture_ex4(),
        "LZ-pos": fixture_lz_pos(),
        "LZ-neg": fixture_lz_neg(),
        "LZ-01": fixture_lz_01(),
        "NULL-2": fixture_null(2),
        "NULL-3": fixture_null(3),
    }
