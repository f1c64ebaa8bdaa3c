"""Finite-dimensional associative algebras over F_p and partial actions of {1,0}.

Vectors are tuples of residues mod p.  Subspaces are kept as row-reduced
basis tuples; row reduction is delegated to sympy's ``DomainMatrix`` over
``GF(p)``.

Globalizability of a linear partial action of the multiplicative monoid
{1,0} is decided without building the coproduct algebra: with dom and im of
alpha_0 ideals, the action is globalizable exactly when ker alpha_0 is an
ideal.  The semigroup view reinterprets the same data pointwise on the
underlying multiplicative semigroup, so the two verdicts can be compared.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from sympy import GF, isprime
from sympy.polys.matrices import DomainMatrix

from .algebra_core import FiniteSemigroup, FiniteMonoid, _check_cap
from .report import Verdict, failed, not_applicable, passed


class AlgebraError(ValueError):
    pass


def _field(p):
    if not isprime(p):
        raise AlgebraError(f"p = {p} is not prime")
    return GF(p)


def _dm(p, rows, ncols):
    K = _field(p)
    return DomainMatrix([[K(int(v)) for v in r] for r in rows], (len(rows), ncols), K)


def _ints(p, dm):
    return [tuple(int(v) % p for v in r) for r in dm.to_list()]


def rref_rows(p: int, rows, ncols: int) -> tuple:
    """Nonzero rows of the reduced row echelon form."""
    if not rows:
        return ()
    red, _ = _dm(p, rows, ncols).rref()
    return tuple(r for r in _ints(p, red) if any(r))


def rank(p: int, rows, ncols: int) -> int:
    return len(rref_rows(p, rows, ncols))


def left_nullspace(p: int, rows, ncols: int) -> tuple:
    """Basis of ``{c : sum_i c_i rows[i] = 0}``."""
    k = len(rows)
    if k == 0:
        return ()
    T = [[rows[i][j] for i in range(k)] for j in range(ncols)]
    if ncols == 0:
        return tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
    ns = _dm(p, T, k).nullspace()
    return rref_rows(p, _ints(p, ns), k)


def in_span(p: int, basis, v) -> bool:
    n = len(v)
    return rank(p, list(basis) + [v], n) == rank(p, list(basis), n)


def span_elements(p: int, basis, n: int):
    """All vectors of the span, in lexicographic order of coefficient tuples."""
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        v = [0] * n
        for c, b in zip(coeffs, basis):
            for j in range(n):
                v[j] = (v[j] + c * b[j]) % p
        out.add(tuple(v))
    return sorted(out)


def combine(p, coeffs, vectors, n):
    v = [0] * n
    for c, b in zip(coeffs, vectors):
        if c:
            for j in range(n):
                v[j] = (v[j] + c * b[j]) % p
    return tuple(v)


@dataclass(frozen=True)
class FiniteAlgebra:
    p: int
    dim: int
    structure: tuple  # c[i][j][k]
    basis_names: tuple = field(default=None)

    def __post_init__(self):
        _field(self.p)
        n, p = self.dim, self.p
        c = tuple(tuple(tuple(int(v) % p for v in row) for row in plane) for plane in self.structure)
        if len(c) != n or any(len(pl) != n or any(len(r) != n for r in pl) for pl in c):
            raise AlgebraError(f"structure constants must have shape {n}x{n}x{n}")
        object.__setattr__(self, "structure", c)
        names = self.basis_names
        if names is None:
            names = tuple(f"e{i + 1}" for i in range(n))
        names = tuple(names)
        if len(names) != n or len(set(names)) != n:
            raise AlgebraError("basis_names must be distinct, one per basis vector")
        object.__setattr__(self, "basis_names", names)

    def basis(self, i: int) -> tuple:
        return tuple(int(j == i) for j in range(self.dim))

    def zero(self) -> tuple:
        return (0,) * self.dim

    def mul(self, u, v) -> tuple:
        n, p, c = self.dim, self.p, self.structure
        out = [0] * n
        for i in range(n):
            if u[i]:
                for j in range(n):
                    if v[j]:
                        s = u[i] * v[j]
                        cij = c[i][j]
                        for k in range(n):
                            out[k] += s * cij[k]
        return tuple(x % p for x in out)

    def vectors(self):
        return list(itertools.product(range(self.p), repeat=self.dim))

    def vector_name(self, v) -> str:
        parts = []
        for c, name in zip(v, self.basis_names):
            if c == 1:
                parts.append(name)
            elif c:
                parts.append(f"{c}*{name}")
        return "+".join(parts) if parts else "0"


def validate_algebra(A: FiniteAlgebra):
    """``None`` if associative on basis triples, else the least failing ``(i, j, k)``."""
    e = [A.basis(i) for i in range(A.dim)]
    for i, j, k in itertools.product(range(A.dim), repeat=3):
        if A.mul(A.mul(e[i], e[j]), e[k]) != A.mul(e[i], A.mul(e[j], e[k])):
            return (i, j, k)
    return None


def is_subalgebra(A: FiniteAlgebra, V) -> bool:
    return all(in_span(A.p, V, A.mul(u, v)) for u in V for v in V)


def ideal_subspace_witness(A: FiniteAlgebra, V):
    """First ``(x, a, side, product)`` with x a basis vector, a in the basis of V.

    ``side`` is ``'left'`` for ``x·a`` and ``'right'`` for ``a·x``.
    """
    for i in range(A.dim):
        x = A.basis(i)
        for a in V:
            xa = A.mul(x, a)
            if not in_span(A.p, V, xa):
                return (x, a, "left", xa)
            ax = A.mul(a, x)
            if not in_span(A.p, V, ax):
                return (x, a, "right", ax)
    return None


def is_ideal_subspace(A: FiniteAlgebra, V) -> bool:
    return ideal_subspace_witness(A, V) is None


@dataclass(frozen=True)
class LinearPA01:
    """A partial action of {1,0} on an algebra: alpha_0 is linear on dom0.

    ``alpha0_matrix[i]`` is the image of ``dom0_basis[i]``.
    """

    algebra: FiniteAlgebra
    dom0_basis: tuple
    alpha0_matrix: tuple

    def __post_init__(self):
        p, n = self.algebra.p, self.algebra.dim
        B = tuple(tuple(int(v) % p for v in r) for r in self.dom0_basis)
        Im = tuple(tuple(int(v) % p for v in r) for r in self.alpha0_matrix)
        if any(len(r) != n for r in B + Im):
            raise AlgebraError(f"vectors must have length {n}")
        if len(B) != len(Im):
            raise AlgebraError("alpha0_matrix needs one row per dom0 basis vector")
        if rank(p, B, n) != len(B):
            raise AlgebraError("dom0_basis is linearly dependent")
        object.__setattr__(self, "dom0_basis", B)
        object.__setattr__(self, "alpha0_matrix", Im)

    @cached_property
    def table(self) -> dict:
        """``alpha_0`` as a dict over all vectors of dom0."""
        A = self.algebra
        out = {}
        for coeffs in itertools.product(range(A.p), repeat=len(self.dom0_basis)):
            v = combine(A.p, coeffs, self.dom0_basis, A.dim)
            out[v] = combine(A.p, coeffs, self.alpha0_matrix, A.dim)
        return out

    def apply(self, v):
        return self.table.get(tuple(v))

    @property
    def dom(self) -> tuple:
        return rref_rows(self.algebra.p, self.dom0_basis, self.algebra.dim)

    @property
    def image(self) -> tuple:
        return rref_rows(self.algebra.p, self.alpha0_matrix, self.algebra.dim)

    @property
    def kernel(self) -> tuple:
        A = self.algebra
        cs = left_nullspace(A.p, self.alpha0_matrix, A.dim)
        vecs = [combine(A.p, c, self.dom0_basis, A.dim) for c in cs]
        return rref_rows(A.p, vecs, A.dim)


def validate_linear_pa01(pa: LinearPA01) -> dict:
    """Axioms of a strong partial action of {1,0} for a linear alpha_0."""
    A = pa.algebra
    p = A.p
    B, Im = pa.dom0_basis, pa.alpha0_matrix
    out = {}
    w = validate_algebra(A)
    out["associative"] = passed() if w is None else failed(w)
    bad = None
    for i, j in itertools.product(range(len(B)), repeat=2):
        if not in_span(p, B, A.mul(B[i], B[j])):
            bad = (A.vector_name(B[i]), A.vector_name(B[j]))
            break
    out["domain_subalgebra"] = passed() if bad is None else failed(bad)
    bad = None
    if out["domain_subalgebra"].ok:
        for i, j in itertools.product(range(len(B)), repeat=2):
            if pa.apply(A.mul(B[i], B[j])) != A.mul(Im[i], Im[j]):
                bad = (A.vector_name(B[i]), A.vector_name(B[j]))
                break
    out["homomorphism"] = passed() if bad is None else failed(bad)
    bad = None
    for i, v in enumerate(Im):
        w2 = pa.apply(v)
        if w2 is None or w2 != v:
            bad = (A.vector_name(B[i]),)
            break
    out["idempotent"] = passed() if bad is None else failed(bad)
    return out


def is_valid_linear_pa01(pa: LinearPA01) -> bool:
    return all(v.ok for v in validate_linear_pa01(pa).values())


def decide_globalizable_algebra01(pa: LinearPA01) -> Verdict:
    """Kernel-ideal test, gated on dom and im of alpha_0 being ideals.

    Failure witness: ``(x, a, x·a)`` (or ``a·x``) by vector names, with
    ``a`` in ker alpha_0 and the product outside it.
    """
    A = pa.algebra
    for label, V in (("dom alpha_0", pa.dom), ("im alpha_0", pa.image)):
        if not is_ideal_subspace(A, V):
            return not_applicable(f"{label} is not an ideal")
    K = pa.kernel
    w = ideal_subspace_witness(A, K)
    if w is None:
        return passed(kernel=[A.vector_name(v) for v in K])
    x, a, side, prod = w
    return failed(
        (A.vector_name(x), A.vector_name(a), A.vector_name(prod)),
        raw=w,
        side=side,
        kernel=[A.vector_name(v) for v in K],
    )


# -- semigroup view --------------------------------------------------------

def _vector_index(p, v):
    i = 0
    for c in v:
        i = i * p + c
    return i


def multiplicative_semigroup(A: FiniteAlgebra) -> FiniteSemigroup:
    """All ``p^dim`` vectors in lexicographic order under the algebra product."""
    _check_cap(A.p ** A.dim, "multiplicative_semigroup")
    vs = A.vectors()
    table = [[_vector_index(A.p, A.mul(u, v)) for v in vs] for u in vs]
    return FiniteSemigroup([A.vector_name(v) for v in vs], table)


def monoid_01() -> FiniteMonoid:
    """The multiplicative monoid {1,0}; identity index 0, zero index 1."""
    return FiniteMonoid(FiniteSemigroup(["1", "0"], [[0, 1], [1, 1]]), 0)


def semigroup_view(pa: LinearPA01):
    from .partial_action import PartialAction

    A = pa.algebra
    X = multiplicative_semigroup(A)
    row0 = [None] * X.n
    for v, w in pa.table.items():
        row0[_vector_index(A.p, v)] = _vector_index(A.p, w)
    return PartialAction(monoid_01(), X, (tuple(range(X.n)), tuple(row0)))


# -- constructions ---------------------------------------------------------

def strict_upper_triangular_3x3(p: int = 2) -> FiniteAlgebra:
    """Basis ``E12, E13, E23``; the only nonzero product is ``E12·E23 = E13``."""
    c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    c[0][2][1] = 1
    return FiniteAlgebra(p, 3, c, ("E12", "E13", "E23"))


def null_algebra(dim: int, p: int = 2) -> FiniteAlgebra:
    return FiniteAlgebra(p, dim, [[[0] * dim for _ in range(dim)] for _ in range(dim)])


def subspaces(p: int, n: int):
    """Every subspace of ``F_p^n`` as a reduced basis, smallest first."""
    seen = set()
    vs = list(itertools.product(range(p), repeat=n))
    for k in range(n + 1):
        for rows in itertools.combinations(vs, k):
            r = rref_rows(p, rows, n)
            if len(r) == k and r not in seen:
                seen.add(r)
                yield r


def all_algebras(dim: int, p: int = 2):
    """Every associative structure on ``F_p^dim`` (raw constants, no iso pruning)."""
    n = dim
    for flat in itertools.product(range(p), repeat=n ** 3):
        c = [[list(flat[(i * n + j) * n:(i * n + j + 1) * n]) for j in range(n)] for i in range(n)]
        A = FiniteAlgebra(p, n, c)
        if validate_algebra(A) is None:
            yield A


def enumerate_linear_pa01(A: FiniteAlgebra):
    """All valid linear partial actions of {1,0} on A."""
    p, n = A.p, A.dim
    vs = list(itertools.product(range(p), repeat=n))
    for D in subspaces(p, n):
        if not is_subalgebra(A, D):
            continue
        for Im in itertools.product(vs, repeat=len(D)):
            pa = LinearPA01(A, D, Im)
            if is_valid_linear_pa01(pa):
                yield pa
