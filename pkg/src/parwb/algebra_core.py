"""Finite semigroups, monoids and groups given by Cayley tables.

Elements are dense integer indices ``0..n-1``; names are only for display.
Products are plain table lookups: ``S.table[x][y]`` is the index of ``x*y``.

The adjoined identity of ``X^1`` is never materialized.  Sweeps that range
over ``X^1`` use the sentinel :data:`ONE` and :func:`mul1`.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

ONE = -1
"""Virtual identity of ``X^1``; multiplies as a no-op."""

DEFAULT_SIZE_CAP = 256


class SizeCapError(ValueError):
    """A construction would exceed the configured carrier size cap."""


class SemigroupError(ValueError):
    """Malformed Cayley table (shape or index range)."""


class NotAssociative(ValueError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not associative at {witness}")


_size_cap = None


def size_cap() -> int:
    if _size_cap is not None:
        return _size_cap
    env = os.environ.get("PARWB_CAP")
    return int(env) if env else DEFAULT_SIZE_CAP


def set_size_cap(cap: int | None) -> int | None:
    """Override the carrier size cap (``None`` restores env/default); returns the old override."""
    global _size_cap
    old, _size_cap = _size_cap, cap
    return old


def _check_cap(n: int, what: str) -> None:
    cap = size_cap()
    if n > cap:
        raise SizeCapError(f"{what} would have {n} elements (cap {cap})")


@dataclass(frozen=True)
class FiniteSemigroup:
    elements: tuple
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(str(e) for e in self.elements))
        object.__setattr__(self, "table", tuple(tuple(row) for row in self.table))

    def __len__(self):
        return len(self.elements)

    @property
    def n(self) -> int:
        return len(self.elements)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def name(self, x: int) -> str:
        if x == ONE:
            return self.one_name()
        return self.elements[x]

    def one_name(self) -> str:
        """Display name of the virtual identity, avoiding clashes."""
        return "1" if "1" not in self.elements else "<1>"

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None

    def product(self, *xs: int) -> int:
        """Product of a sequence of elements of ``X^1`` (``ONE`` allowed)."""
        acc = ONE
        for x in xs:
            acc = mul1(self, acc, x)
        return acc


def mul1(S: FiniteSemigroup, x: int, y: int) -> int:
    if x == ONE:
        return y
    if y == ONE:
        return x
    return S.table[x][y]


def with_one(S: FiniteSemigroup) -> list[int]:
    """Elements of ``X^1`` in sweep order: the virtual identity first."""
    return [ONE, *range(S.n)]


def associativity_witness(table: Sequence[Sequence[int]]):
    """Lexicographically least ``(x, y, z)`` with ``(xy)z != x(yz)``, or None."""
    n = len(table)
    for x in range(n):
        tx = table[x]
        for y in range(n):
            xy = tx[y]
            ty = table[y]
            for z in range(n):
                if table[xy][z] != tx[ty[z]]:
                    return (x, y, z)
    return None


def validate_table(table) -> tuple:
    try:
        rows = [list(r) for r in table]
    except TypeError:
        raise SemigroupError("table must be a list of rows") from None
    n = len(rows)
    if n == 0:
        raise SemigroupError("table must be nonempty")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise SemigroupError(f"table is not square: row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise SemigroupError(f"table[{i}][{j}] = {v!r} is not an index in [0, {n})")
    return tuple(tuple(r) for r in rows)


def validate_semigroup(table, elements: Sequence[str] | None = None) -> FiniteSemigroup:
    """Build a semigroup from a Cayley table.

    Raises :class:`SemigroupError` for shape/range problems and
    :class:`NotAssociative` (carrying the least violating triple) otherwise.
    """
    t = validate_table(table)
    w = associativity_witness(t)
    if w is not None:
        raise NotAssociative(w)
    if elements is None:
        elements = [str(i) for i in range(len(t))]
    if len(elements) != len(t):
        raise SemigroupError(f"{len(elements)} names for a table of size {len(t)}")
    if len(set(elements)) != len(elements):
        raise SemigroupError("element names must be distinct")
    return FiniteSemigroup(tuple(elements), t)


@dataclass(frozen=True)
class FiniteMonoid:
    base: FiniteSemigroup
    identity: int

    def __post_init__(self):
        S, e = self.base, self.identity
        if not 0 <= e < S.n:
            raise SemigroupError(f"identity index {e} out of range")
        for x in range(S.n):
            if S.table[e][x] != x or S.table[x][e] != x:
                raise SemigroupError(f"{S.name(e)} is not an identity: fails at {S.name(x)}")

    @property
    def n(self) -> int:
        return self.base.n

    def __len__(self):
        return self.base.n

    @property
    def elements(self):
        return self.base.elements

    @property
    def table(self):
        return self.base.table

    def mul(self, x, y):
        return self.base.table[x][y]

    def name(self, x):
        return self.base.elements[x]

    def index(self, name):
        return self.base.index(name)


@dataclass(frozen=True)
class FiniteGroup:
    base: FiniteMonoid
    inverse: tuple

    def __post_init__(self):
        object.__setattr__(self, "inverse", tuple(self.inverse))
        M = self.base
        if len(self.inverse) != M.n:
            raise SemigroupError("inverse table has wrong length")
        for x, xi in enumerate(self.inverse):
            if not 0 <= xi < M.n or M.mul(x, xi) != M.identity or M.mul(xi, x) != M.identity:
                raise SemigroupError(f"bad inverse for {M.name(x)}")

    @property
    def n(self):
        return self.base.n

    @property
    def identity(self):
        return self.base.identity

    @property
    def elements(self):
        return self.base.elements

    def mul(self, x, y):
        return self.base.mul(x, y)


def find_identity(S: FiniteSemigroup) -> int | None:
    for e in range(S.n):
        if all(S.table[e][x] == x and S.table[x][e] == x for x in range(S.n)):
            return e
    return None


def find_zero(S: FiniteSemigroup) -> int | None:
    for z in range(S.n):
        if all(S.table[z][x] == z and S.table[x][z] == z for x in range(S.n)):
            return z
    return None


def as_monoid(S: FiniteSemigroup) -> FiniteMonoid:
    e = find_identity(S)
    if e is None:
        raise SemigroupError("semigroup has no identity element")
    return FiniteMonoid(S, e)


def group_inverses(M: FiniteMonoid) -> tuple | None:
    inv = []
    for x in range(M.n):
        for y in range(M.n):
            if M.mul(x, y) == M.identity and M.mul(y, x) == M.identity:
                inv.append(y)
                break
        else:
            return None
    return tuple(inv)


def as_group(M: FiniteMonoid) -> FiniteGroup:
    inv = group_inverses(M)
    if inv is None:
        raise SemigroupError("monoid is not a group")
    return FiniteGroup(M, inv)


# -- subsets ---------------------------------------------------------------

def subset(S: FiniteSemigroup, members: Iterable[int]) -> frozenset:
    """A subset of the carrier, as a frozenset of indices (index-checked)."""
    out = frozenset(members)
    for a in out:
        if not 0 <= a < S.n:
            raise IndexError(f"index {a} outside carrier of size {S.n}")
    return out


def is_subsemigroup(S: FiniteSemigroup, A) -> bool:
    return all(S.table[a][b] in A for a in A for b in A)


def ideal_witness(S: FiniteSemigroup, A):
    """First ``(x, a, side)`` with ``x*a`` (side 'left') or ``a*x`` not in A."""
    for a in sorted(A):
        for x in range(S.n):
            if S.table[x][a] not in A:
                return (x, a, "left")
            if S.table[a][x] not in A:
                return (x, a, "right")
    return None


def is_ideal(S: FiniteSemigroup, A) -> bool:
    return ideal_witness(S, A) is None


def unit_of(S: FiniteSemigroup, A) -> int | None:
    """An element of A acting as a two-sided identity on A, if any."""
    for u in sorted(A):
        if all(S.table[u][a] == a and S.table[a][u] == a for a in A):
            return u
    return None


def is_unital_ideal(S: FiniteSemigroup, A) -> tuple[bool, int | None]:
    """``(True, unit)`` when A is an ideal with its own identity."""
    if not A or not is_ideal(S, A):
        return False, None
    u = unit_of(S, A)
    return u is not None, u


# -- constructions ---------------------------------------------------------

def adjoin_identity(S: FiniteSemigroup, name: str = "1") -> FiniteMonoid:
    n = S.n
    _check_cap(n + 1, "S^1")
    rows = [list(r) + [i] for i, r in enumerate(S.table)]
    rows.append(list(range(n + 1)))
    return FiniteMonoid(FiniteSemigroup(S.elements + (_fresh(S, name),), rows), n)


def adjoin_zero(S: FiniteSemigroup, name: str = "0") -> FiniteSemigroup:
    n = S.n
    _check_cap(n + 1, "S^0")
    rows = [list(r) + [n] for r in S.table]
    rows.append([n] * (n + 1))
    return FiniteSemigroup(S.elements + (_fresh(S, name),), rows)


def _fresh(S, name):
    while name in S.elements:
        name = name + "'"
    return name


def make_g0(G: FiniteGroup) -> FiniteMonoid:
    """The monoid ``G^0``: group elements keep their indices, zero is last."""
    Z = adjoin_zero(G.base.base)
    return FiniteMonoid(Z, G.identity)


def left_zero(n: int) -> FiniteSemigroup:
    _check_cap(n, "left_zero")
    return FiniteSemigroup(_letters(n), [[x] * n for x in range(n)])


def right_zero(n: int) -> FiniteSemigroup:
    _check_cap(n, "right_zero")
    return FiniteSemigroup(_letters(n), [list(range(n)) for _ in range(n)])


def null(n: int) -> FiniteSemigroup:
    """Null semigroup on n elements; index 0 is the zero."""
    _check_cap(n, "null")
    names = ["0"] + list(_letters(n - 1)) if n > 1 else ["0"]
    return FiniteSemigroup(names, [[0] * n for _ in range(n)])


def _letters(n):
    if n <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:n])
    return tuple(f"a{i}" for i in range(n))


def mult_mod(n: int) -> FiniteSemigroup:
    _check_cap(n, "mult_mod")
    return FiniteSemigroup([str(i) for i in range(n)], [[(x * y) % n for y in range(n)] for x in range(n)])


def multiples_mod(n: int, d: int) -> FiniteSemigroup:
    """The subsemigroup ``dZ/nZ`` of ``mult_mod(n)``, named by residues."""
    vals = sorted({(d * k) % n for k in range(n)})
    _check_cap(len(vals), "multiples_mod")
    pos = {v: i for i, v in enumerate(vals)}
    return FiniteSemigroup([str(v) for v in vals], [[pos[(a * b) % n] for b in vals] for a in vals])


def cyclic_group(n: int) -> FiniteGroup:
    _check_cap(n, "cyclic_group")
    if n == 1:
        names = ["1"]
    else:
        names = ["1", "g"] + [f"g^{k}" for k in range(2, n)]
    S = FiniteSemigroup(names, [[(x + y) % n for y in range(n)] for x in range(n)])
    return FiniteGroup(FiniteMonoid(S, 0), [(-x) % n for x in range(n)])


def direct_product(*factors: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product; elements in lexicographic (last-fastest) order."""
    flat = list(factors)
    size = 1
    for F in flat:
        size *= F.n
    _check_cap(size, "direct_product")
    tuples = list(itertools.product(*[range(F.n) for F in flat]))
    pos = {t: i for i, t in enumerate(tuples)}
    names = ["(" + ",".join(F.elements[c] for F, c in zip(flat, t)) + ")" for t in tuples]
    table = [
        [pos[tuple(F.table[a][b] for F, a, b in zip(flat, s, t))] for t in tuples]
        for s in tuples
    ]
    return FiniteSemigroup(names, table)


def power(S: FiniteSemigroup, k: int) -> FiniteSemigroup:
    return direct_product(*([S] * k))


def sub_semigroup(S: FiniteSemigroup, members: Iterable[int]) -> tuple[FiniteSemigroup, list[int]]:
    """Restrict S to a closed subset; returns the semigroup and the embedding."""
    idx = sorted(set(members))
    A = frozenset(idx)
    if not is_subsemigroup(S, A):
        raise SemigroupError("subset is not closed under multiplication")
    pos = {v: i for i, v in enumerate(idx)}
    T = FiniteSemigroup([S.elements[v] for v in idx], [[pos[S.table[a][b]] for b in idx] for a in idx])
    return T, idx


def upper_triangular_strict_3x3(p: int = 2) -> FiniteSemigroup:
    """Multiplicative semigroup of strictly upper-triangular 3x3 matrices over F_p.

    Coordinates are ``(a12, a13, a23)``; elements listed lexicographically.
    """
    from .falgebra import strict_upper_triangular_3x3, multiplicative_semigroup

    return multiplicative_semigroup(strict_upper_triangular_3x3(p))


# -- small census ----------------------------------------------------------

def _all_tables(n: int):
    """All associative n x n tables, by backtracking over cells row-major."""
    cells = [(i, j) for i in range(n) for j in range(n)]
    t = [[-1] * n for _ in range(n)]

    def consistent():
        for x in range(n):
            for y in range(n):
                xy = t[x][y]
                if xy < 0:
                    continue
                for z in range(n):
                    yz = t[y][z]
                    if yz < 0:
                        continue
                    l, r = t[xy][z], t[x][yz]
                    if l >= 0 and r >= 0 and l != r:
                        return False
        return True

    def go(k):
        if k == len(cells):
            yield tuple(tuple(r) for r in t)
            return
        i, j = cells[k]
        for v in range(n):
            t[i][j] = v
            if consistent():
                yield from go(k + 1)
        t[i][j] = -1

    yield from go(0)


def canonical_table(table) -> tuple:
    """Isomorphism-invariant form: least relabeled table over all permutations."""
    n = len(table)
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        cand = tuple(tuple(perm[table[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
        if best is None or cand < best:
            best = cand
    return best


_census_cache: dict = {}


def all_semigroups(n: int, up_to_iso: bool = True) -> list[FiniteSemigroup]:
    """Every semigroup of order n (labelled, or one per isomorphism class)."""
    key = (n, up_to_iso)
    if key not in _census_cache:
        tables = list(_all_tables(n))
        if up_to_iso:
            tables = sorted({canonical_table(t) for t in tables})
        _census_cache[key] = [FiniteSemigroup([str(i) for i in range(n)], t) for t in tables]
    return _census_cache[key]


def all_monoids(n: int) -> list[FiniteMonoid]:
    """One monoid per isomorphism class of order n, identity relabelled to 0."""
    out = []
    for S in all_semigroups(n, up_to_iso=True):
        e = find_identity(S)
        if e is None:
            continue
        order = [e] + [x for x in range(n) if x != e]
        pos = {v: i for i, v in enumerate(order)}
        names = ["e"] + [f"m{i}" for i in range(1, n)]
        T = FiniteSemigroup(names, [[pos[S.table[a][b]] for b in order] for a in order])
        out.append(FiniteMonoid(T, 0))
    return out


def is_left_zero(S: FiniteSemigroup) -> bool:
    return all(S.table[x][y] == x for x in range(S.n) for y in range(S.n))


def is_right_zero(S: FiniteSemigroup) -> bool:
    return all(S.table[x][y] == y for x in range(S.n) for y in range(S.n))


def is_null(S: FiniteSemigroup) -> bool:
    z = S.table[0][0]
    return all(S.table[x][y] == z for x in range(S.n) for y in range(S.n))


@dataclass(frozen=True)
class G0Structure:
    """Decomposition of a monoid of the form ``G^0``."""

    zero: int
    identity: int
    group: tuple  # indices of G in index order
    inverse: dict  # g -> g^{-1}, over G only


def g0_structure(M: FiniteMonoid) -> G0Structure | None:
    """Recognize ``M = G^0``: an absorbing zero whose complement is a group."""
    if M.n < 2:
        return None
    z = find_zero(M.base)
    if z is None:
        return None
    G = [x for x in range(M.n) if x != z]
    Gs = set(G)
    if any(M.mul(a, b) not in Gs for a in G for b in G):
        return None
    e = M.identity
    inv = {}
    for a in G:
        for b in G:
            if M.mul(a, b) == e and M.mul(b, a) == e:
                inv[a] = b
                break
        else:
            return None
    return G0Structure(z, e, tuple(G), inv)
