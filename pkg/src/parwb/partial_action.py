"""Strong partial actions of a finite monoid on a finite semigroup.

A partial map is stored as a total tuple over the carrier, with ``None``
where the map is undefined; the domain is derived from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra_core import (
    FiniteMonoid,
    FiniteSemigroup,
    SemigroupError,
    g0_structure,
    ideal_witness,
    is_subsemigroup,
    is_unital_ideal,
    sub_semigroup,
)
from .report import Verdict, failed, passed

UNDEF = None


class ActionError(ValueError):
    pass


@dataclass(frozen=True, eq=True)
class PartialAction:
    monoid: FiniteMonoid
    carrier: FiniteSemigroup
    maps: tuple

    def __post_init__(self):
        maps = tuple(tuple(row) for row in self.maps)
        object.__setattr__(self, "maps", maps)
        n = self.carrier.n
        if len(maps) != self.monoid.n:
            raise ActionError(f"expected {self.monoid.n} maps, got {len(maps)}")
        for m, row in enumerate(maps):
            if len(row) != n:
                raise ActionError(f"map for {self.monoid.name(m)} has length {len(row)}, expected {n}")
            for x, y in enumerate(row):
                if y is not UNDEF and not (isinstance(y, int) and 0 <= y < n):
                    raise IndexError(f"map {self.monoid.name(m)}: image of {x} is {y!r}, out of range")

    def __hash__(self):
        return hash(self.maps)

    def apply(self, m: int, x: int):
        return self.maps[m][x]

    def dom(self, m: int) -> frozenset:
        return self._doms[m]

    def im(self, m: int) -> frozenset:
        return self._ims[m]

    @cached_property
    def _doms(self):
        return tuple(frozenset(x for x, y in enumerate(row) if y is not UNDEF) for row in self.maps)

    @cached_property
    def _ims(self):
        return tuple(frozenset(y for y in row if y is not UNDEF) for row in self.maps)

    @property
    def is_global(self) -> bool:
        return all(y is not UNDEF for row in self.maps for y in row)

    def preimage(self, m: int, A) -> frozenset:
        """``alpha_m^{-1}(A)``."""
        return frozenset(x for x, y in enumerate(self.maps[m]) if y is not UNDEF and y in A)


class GlobalAction(PartialAction):
    def __post_init__(self):
        super().__post_init__()
        if not self.is_global:
            raise ActionError("global action must be total for every monoid element")


def as_global(alpha: PartialAction) -> GlobalAction:
    return GlobalAction(alpha.monoid, alpha.carrier, alpha.maps)


# -- validation ------------------------------------------------------------

AXIOMS = ("PA1", "PA2", "PA3", "domains_subsemigroups", "maps_homomorphisms")


def _axiom_witnesses(M, X, maps):
    """Yield ``(axiom, raw witness)`` for the least violation of each axiom."""
    n = X.n
    e = M.identity
    t = X.table
    row_e = maps[e]
    for x in range(n):
        if row_e[x] != x:
            yield "PA1", (e, x)
            break

    doms = [frozenset(x for x in range(n) if maps[m][x] is not UNDEF) for m in range(M.n)]
    pa2 = pa3 = None
    for m in range(M.n):
        am = maps[m]
        for k in range(M.n):
            nm = M.mul(k, m)
            ak, anm = maps[k], maps[nm]
            for x in range(n):
                y = am[x]
                lhs = y is not UNDEF and ak[y] is not UNDEF
                rhs = anm[x] is not UNDEF and y is not UNDEF
                if pa2 is None and lhs != rhs:
                    pa2 = (m, k, x)
                if pa3 is None and lhs and ak[y] != anm[x]:
                    pa3 = (m, k, x)
            if pa2 is not None and pa3 is not None:
                break
        if pa2 is not None and pa3 is not None:
            break
    if pa2 is not None:
        yield "PA2", pa2
    if pa3 is not None:
        yield "PA3", pa3

    sub = hom = None
    for m in range(M.n):
        am = maps[m]
        D = doms[m]
        for x in sorted(D):
            for y in sorted(D):
                xy = t[x][y]
                if sub is None and xy not in D:
                    sub = (m, x, y)
                if hom is None and xy in D and am[xy] != t[am[x]][am[y]]:
                    hom = (m, x, y)
    if sub is not None:
        yield "domains_subsemigroups", sub
    if hom is not None:
        yield "maps_homomorphisms", hom


def is_strong_partial_action(M: FiniteMonoid, X: FiniteSemigroup, maps) -> bool:
    for _ in _axiom_witnesses(M, X, maps):
        return False
    return True


def _names(alpha_or_pair, axiom, raw):
    M, X = alpha_or_pair
    if axiom in ("PA1",):
        return (M.name(raw[0]), X.name(raw[1]))
    if axiom in ("PA2", "PA3"):
        return (M.name(raw[0]), M.name(raw[1]), X.name(raw[2]))
    return (M.name(raw[0]), X.name(raw[1]), X.name(raw[2]))


def validate_partial_action(alpha: PartialAction) -> dict[str, Verdict]:
    """Check every axiom; each failing axiom carries its least witness.

    Witness shapes: PA1 ``(e, x)``; PA2/PA3 ``(m, n, x)`` with the axiom
    instance for the pair ``m, n``; subsemigroup/homomorphism ``(m, x, y)``.
    """
    M, X = alpha.monoid, alpha.carrier
    out = {a: passed() for a in AXIOMS}
    for axiom, raw in _axiom_witnesses(M, X, alpha.maps):
        out[axiom] = failed(_names((M, X), axiom, raw), raw=raw)
    return out


def is_valid(alpha: PartialAction) -> bool:
    return is_strong_partial_action(alpha.monoid, alpha.carrier, alpha.maps)


def require_valid(alpha: PartialAction) -> None:
    for axiom, raw in _axiom_witnesses(alpha.monoid, alpha.carrier, alpha.maps):
        raise ActionError(f"{axiom} fails at {_names((alpha.monoid, alpha.carrier), axiom, raw)}")


def check_ideal_hypotheses(alpha: PartialAction) -> dict:
    """Ideal and unital-ideal verdicts for every ``dom alpha_m`` and ``im alpha_m``."""
    X, M = alpha.carrier, alpha.monoid
    per = {}
    for m in range(M.n):
        entry = {}
        for label, A in (("dom", alpha.dom(m)), ("im", alpha.im(m))):
            w = ideal_witness(X, A)
            unital, unit = is_unital_ideal(X, A)
            entry[f"{label}_ideal"] = w is None
            entry[f"{label}_unital"] = unital
            entry[f"{label}_unit"] = X.name(unit) if unit is not None else None
            if w is not None:
                entry[f"{label}_ideal_witness"] = (X.name(w[0]), X.name(w[1]), w[2])
        per[M.name(m)] = entry
    return {
        "per_element": per,
        "all_ideal": all(v["dom_ideal"] and v["im_ideal"] for v in per.values()),
        "all_unital": all(v["dom_unital"] and v["im_unital"] for v in per.values()),
    }


def ideal_hypotheses_hold(alpha: PartialAction) -> bool:
    X = alpha.carrier
    return all(
        ideal_witness(X, alpha.dom(m)) is None and ideal_witness(X, alpha.im(m)) is None
        for m in range(alpha.monoid.n)
    )


def unital_hypotheses_hold(alpha: PartialAction) -> bool:
    X = alpha.carrier
    return all(
        is_unital_ideal(X, alpha.dom(m))[0] and is_unital_ideal(X, alpha.im(m))[0]
        for m in range(alpha.monoid.n)
    )


# -- constructions ---------------------------------------------------------

def restrict_global(beta: PartialAction, Y) -> PartialAction:
    """Restriction of a global action to a subsemigroup Y of its carrier.

    ``dom alpha_m = Y ∩ beta_m^{-1}(Y)``; the new carrier is Y, reindexed in
    increasing order of the original indices.
    """
    if not beta.is_global:
        raise ActionError("restrict_global needs a global action")
    Z = beta.carrier
    Yset = frozenset(Y)
    if not is_subsemigroup(Z, Yset):
        raise SemigroupError("Y is not a subsemigroup")
    T, emb = sub_semigroup(Z, Yset)
    pos = {v: i for i, v in enumerate(emb)}
    maps = []
    for m in range(beta.monoid.n):
        row = beta.maps[m]
        maps.append(tuple(pos[row[v]] if row[v] in Yset else UNDEF for v in emb))
    return PartialAction(beta.monoid, T, tuple(maps))


def group_of_g0(M: FiniteMonoid):
    """The group G inside ``M = G^0`` as a monoid, plus the embedding."""
    st = g0_structure(M)
    if st is None:
        raise ActionError("monoid is not of the form G^0")
    G = list(st.group)
    pos = {g: i for i, g in enumerate(G)}
    S = FiniteSemigroup([M.name(g) for g in G], [[pos[M.mul(a, b)] for b in G] for a in G])
    return FiniteMonoid(S, pos[st.identity]), G


def induced_group_action(alpha: PartialAction) -> PartialAction:
    """Drop the zero component of an action of ``G^0``."""
    G, emb = group_of_g0(alpha.monoid)
    return PartialAction(G, alpha.carrier, tuple(alpha.maps[g] for g in emb))


def from_partial_maps(M: FiniteMonoid, X: FiniteSemigroup, maps: dict) -> PartialAction:
    """Build an action from ``{m: {x: y}}``; the identity defaults to ``id``."""
    rows = []
    for m in range(M.n):
        if m in maps:
            d = maps[m]
            rows.append(tuple(d.get(x, UNDEF) for x in range(X.n)))
        elif m == M.identity:
            rows.append(tuple(range(X.n)))
        else:
            rows.append(tuple([UNDEF] * X.n))
    return PartialAction(M, X, tuple(rows))
