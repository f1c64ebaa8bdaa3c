"""The set X_M = (M × X)/≈ with its action β and the map ι.

Pairs ``(m, x)`` are numbered ``m * |X| + x``.  Class ids are assigned in
order of each class's least pair, so ids are reproducible across runs and
across the two independent constructions below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from scipy.cluster.hierarchy import DisjointSet

from .algebra_core import g0_structure
from .partial_action import ActionError, PartialAction
from .report import InternalConsistencyError


@dataclass(frozen=True, eq=False)
class MXPartition:
    alpha: PartialAction
    class_of: tuple  # pair index -> class id
    members: tuple  # class id -> sorted tuple of (m, x)
    beta: tuple  # beta[n][c]
    iota: tuple  # iota[x]

    @property
    def monoid(self):
        return self.alpha.monoid

    @property
    def carrier(self):
        return self.alpha.carrier

    @property
    def n_classes(self) -> int:
        return len(self.members)

    def cls(self, m: int, x: int) -> int:
        return self.class_of[m * self.carrier.n + x]

    def blocks(self) -> frozenset:
        return frozenset(frozenset(ms) for ms in self.members)

    def same_partition(self, other: "MXPartition") -> bool:
        return self.class_of == other.class_of

    @cached_property
    def by_m(self) -> tuple:
        """``by_m[c]`` maps m to the sorted x's with ``(m, x)`` in class c."""
        out = []
        for ms in self.members:
            d = {}
            for m, x in ms:
                d.setdefault(m, []).append(x)
            out.append({m: tuple(xs) for m, xs in d.items()})
        return tuple(out)

    def pair_name(self, m: int, x: int) -> str:
        return f"({self.monoid.name(m)},{self.carrier.name(x)})"

    def class_name(self, c: int) -> str:
        m, x = self.members[c][0]
        return f"[{self.monoid.name(m)},{self.carrier.name(x)}]"

    def member_names(self, c: int) -> list:
        return [self.pair_name(m, x) for m, x in self.members[c]]

    def image_classes(self, m: int) -> frozenset:
        """``[m, X]``."""
        return frozenset(self.cls(m, x) for x in range(self.carrier.n))


def harpoon_edges(alpha: PartialAction) -> list:
    """All ``((m, x), (n, y))`` with ``m = nk``, ``x ∈ dom α_k``, ``y = α_k(x)``."""
    M = alpha.monoid
    edges = set()
    for n in range(M.n):
        for k in range(M.n):
            m = M.mul(n, k)
            row = alpha.maps[k]
            for x, y in enumerate(row):
                if y is not None:
                    edges.add(((m, x), (n, y)))
    return sorted(edges)


def _from_labels(alpha: PartialAction, label) -> MXPartition:
    """Build the partition from any labelling of pairs, then β and ι."""
    M, X = alpha.monoid, alpha.carrier
    nx = X.n
    total = M.n * nx
    ids = {}
    class_of = []
    members = []
    for p in range(total):
        key = label[p]
        c = ids.get(key)
        if c is None:
            c = ids[key] = len(members)
            members.append([])
        class_of.append(c)
        members[c].append(divmod(p, nx))
    class_of = tuple(class_of)
    members = tuple(tuple(ms) for ms in members)
    beta = []
    for n in range(M.n):
        row = []
        for c, ms in enumerate(members):
            images = {class_of[M.mul(n, m) * nx + x] for m, x in ms}
            if len(images) != 1:
                raise InternalConsistencyError(
                    f"beta_{M.name(n)} is not well defined on class {c}: images {sorted(images)}"
                )
            row.append(images.pop())
        beta.append(tuple(row))
    iota = tuple(class_of[M.identity * nx + x] for x in range(nx))
    return MXPartition(alpha, class_of, members, tuple(beta), iota)


def classes_generic(alpha: PartialAction) -> MXPartition:
    """Connected components of the harpoon relation, by union-find."""
    nx = alpha.carrier.n
    total = alpha.monoid.n * nx
    ds = DisjointSet(range(total))
    for (m, x), (n, y) in harpoon_edges(alpha):
        ds.merge(m * nx + x, n * nx + y)
    label = [ds[p] for p in range(total)]
    return _from_labels(alpha, label)


def classes_g0_closed_form(alpha: PartialAction) -> MXPartition:
    """Classes for ``M = G^0`` read off from the explicit class formulas.

    * ``x ∉ dom α_0``: ``[0,x] = {(0, α_g(x)) : g ∈ G, x ∈ dom α_g}``;
    * ``g ∈ G``, ``x ∉ im α_0``: ``[g,x] = {(h, α_{h⁻¹g}(x)) : x ∈ dom α_{h⁻¹g}}``;
    * ``g ∈ G``, ``x ∈ im α_0``: ``[g,x] = (G × {x}) ⊔ ({0} × α_0⁻¹(x))``.

    A pair ``(0, x)`` with ``x ∈ dom α_0`` lies in ``[e, α_0(x)]``.
    """
    M = alpha.monoid
    st = g0_structure(M)
    if st is None:
        raise ActionError("closed-form classes need a monoid of the form G^0")
    z, G, inv = st.zero, st.group, st.inverse
    maps = alpha.maps
    nx = alpha.carrier.n
    a0 = maps[z]
    im0 = alpha.im(z)

    def block(m, x):
        if m == z:
            if a0[x] is None:
                return frozenset((z, maps[g][x]) for g in G if maps[g][x] is not None)
            return block(st.identity, a0[x])
        if x in im0:
            return frozenset([(h, x) for h in G] + [(z, u) for u in range(nx) if a0[u] == x])
        out = []
        for h in G:
            k = M.mul(inv[h], m)
            if maps[k][x] is not None:
                out.append((h, maps[k][x]))
        return frozenset(out)

    total = M.n * nx
    blocks = [block(*divmod(p, nx)) for p in range(total)]
    for p, B in enumerate(blocks):
        pair = divmod(p, nx)
        if pair not in B:
            raise InternalConsistencyError(f"closed form: {pair} missing from its own class")
        for m, x in B:
            if blocks[m * nx + x] != B:
                raise InternalConsistencyError(f"closed form: classes of {pair} and {(m, x)} overlap")
    return _from_labels(alpha, blocks)


def mx_partition(alpha: PartialAction) -> MXPartition:
    return classes_generic(alpha)


def beta_of(P: MXPartition, n: int, c: int) -> int:
    return P.beta[n][c]


def iota_of(P: MXPartition, x: int) -> int:
    return P.iota[x]
