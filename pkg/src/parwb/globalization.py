"""Globalizations of a partial action and checks that a candidate is one.

A candidate is a global action ``beta`` together with a map ``iota`` from
the carrier of ``alpha``.  At set level ``beta`` is a :class:`SetAction`;
when ``beta`` is a :class:`GlobalAction` on a semigroup the checks also
cover the multiplicative structure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .algebra_core import FiniteSemigroup, is_left_zero, is_right_zero
from .criteria import CarrierError
from .mx_quotient import MXPartition, classes_generic
from .partial_action import GlobalAction, PartialAction
from .report import InternalConsistencyError
from .rewriting import RewritingSystem, is_locally_confluent


@dataclass(frozen=True)
class SetAction:
    """A total action of a monoid on ``range(size)``."""

    monoid: object
    names: tuple
    maps: tuple

    @property
    def size(self) -> int:
        return len(self.names)


@dataclass
class Check:
    ok: bool
    kind: str | None = None
    counterexample: tuple | None = None

    def __bool__(self):
        return self.ok


def _parts(beta):
    if isinstance(beta, PartialAction):
        return beta.monoid, beta.carrier.n, beta.maps, beta.carrier
    return beta.monoid, beta.size, beta.maps, None


def set_globalization(alpha: PartialAction, P: MXPartition | None = None):
    """``(beta, iota)`` on the classes of X_M."""
    P = P or classes_generic(alpha)
    names = tuple(P.class_name(c) for c in range(P.n_classes))
    return SetAction(alpha.monoid, names, P.beta), P.iota


def verify_globalization(alpha: PartialAction, beta, iota) -> Check:
    """Check that ``(beta, iota)`` is a globalization of ``alpha``.

    Order of checks: beta is an action, iota is a morphism, then the
    pullback property ``beta_m(iota x) = iota y ⟹ x ∈ dom α_m, α_m(x) = y``.
    The counterexample is ``(m, x, y)`` (or ``(m, n, p)`` for action laws).
    """
    M, size, bmaps, S = _parts(beta)
    X = alpha.carrier
    iota = tuple(iota)
    e = M.identity
    if len(iota) != X.n or any(not 0 <= v < size for v in iota):
        return Check(False, "iota_range", None)
    for p in range(size):
        if bmaps[e][p] != p:
            return Check(False, "beta_identity", (e, p))
    for m in range(M.n):
        for n in range(M.n):
            nm = M.mul(n, m)
            for p in range(size):
                if bmaps[n][bmaps[m][p]] != bmaps[nm][p]:
                    return Check(False, "beta_action_law", (m, n, p))
    if S is not None:
        for m in range(M.n):
            bm = bmaps[m]
            for p in range(size):
                for q in range(size):
                    if bm[S.table[p][q]] != S.table[bm[p]][bm[q]]:
                        return Check(False, "beta_homomorphism", (m, p, q))
        for x in range(X.n):
            for y in range(X.n):
                if iota[X.table[x][y]] != S.table[iota[x]][iota[y]]:
                    return Check(False, "iota_homomorphism", (x, y))
    for m in range(M.n):
        am = alpha.maps[m]
        for x in range(X.n):
            if am[x] is not None and bmaps[m][iota[x]] != iota[am[x]]:
                return Check(False, "iota_morphism", (m, x, am[x]))
    for m in range(M.n):
        am = alpha.maps[m]
        for x in range(X.n):
            bx = bmaps[m][iota[x]]
            for y in range(X.n):
                if bx == iota[y] and am[x] != y:
                    return Check(False, "pullback", (m, x, y))
    return Check(True)


def is_morphism(alpha: PartialAction, gamma, kappa) -> Check:
    M, size, gmaps, S = _parts(gamma)
    X = alpha.carrier
    for m in range(M.n):
        am = alpha.maps[m]
        for x in range(X.n):
            if am[x] is not None and gmaps[m][kappa[x]] != kappa[am[x]]:
                return Check(False, "kappa_morphism", (m, x, am[x]))
    if S is not None:
        for x, y in itertools.product(range(X.n), repeat=2):
            if kappa[X.table[x][y]] != S.table[kappa[x]][kappa[y]]:
                return Check(False, "kappa_homomorphism", (x, y))
    return Check(True)


def induced_morphism(alpha: PartialAction, gamma, kappa, P: MXPartition | None = None) -> tuple:
    """``κ'([m,x]) = γ_m(κ(x))`` on class ids, checked on every member."""
    chk = is_morphism(alpha, gamma, kappa)
    if not chk.ok:
        raise ValueError(f"kappa is not a morphism: {chk.kind} at {chk.counterexample}")
    P = P or classes_generic(alpha)
    _, _, gmaps, _ = _parts(gamma)
    out = []
    for c, ms in enumerate(P.members):
        vals = {}
        for m, x in ms:
            vals.setdefault(gmaps[m][kappa[x]], (m, x))
        if len(vals) != 1:
            a, b = sorted(vals.values())[:2]
            raise InternalConsistencyError(f"kappa' ill-defined on class {c}: {a} vs {b}")
        out.append(next(iter(vals)))
    kp = tuple(out)
    if any(kp[P.iota[x]] != kappa[x] for x in range(alpha.carrier.n)):
        raise InternalConsistencyError("kappa' ∘ iota differs from kappa")
    return kp


# -- the reflection in semigroups ----------------------------------------------

class NotConfluentError(ValueError):
    pass


class Reflection:
    """Normal-form words of X_M under concatenation followed by reduction.

    Built only for locally confluent systems, where normal forms are
    unique and equality of elements is equality of normal forms.
    """

    def __init__(self, alpha: PartialAction, P: MXPartition | None = None):
        self.alpha = alpha
        self.P = P or classes_generic(alpha)
        self.rs = RewritingSystem(self.P)
        v = is_locally_confluent(self.rs)
        if not v.locally_confluent:
            raise NotConfluentError("rewriting system is not locally confluent; equality is not decidable here")
        self._nf = {}

    def normalize(self, w) -> tuple:
        w = tuple(w)
        r = self._nf.get(w)
        if r is None:
            r = self._nf[w] = self.rs.normalize(w)
        return r

    def multiply(self, u, v) -> tuple:
        return self.rs.normalize(tuple(u) + tuple(v))

    def equal(self, u, v) -> bool:
        return self.normalize(u) == self.normalize(v)

    def act(self, m: int, w) -> tuple:
        b = self.P.beta[m]
        return self.normalize(tuple(b[c] for c in w))

    def iota(self, x: int) -> tuple:
        return (self.P.iota[x],)

    def enumerate(self, k: int) -> list:
        """All normal-form words of length at most k, shortest first."""
        n = self.P.n_classes
        level = [(c,) for c in range(n)]
        out = list(level)
        for _ in range(k - 1):
            nxt = []
            for w in level:
                for c in range(n):
                    if not self.rs.pair_reducts(w[-1], c):
                        nxt.append(w + (c,))
            out.extend(nxt)
            level = nxt
        return out


def reflection_nf_semigroup(alpha: PartialAction, P: MXPartition | None = None) -> Reflection:
    return Reflection(alpha, P)


def _assoc_python(R, words):
    # Products push letters onto a normal-form stack, so (uv)w and u(vw)
    # are the same computation whenever v+w is already irreducible.
    for v in words:
        for w in words:
            vw = R.multiply(v, w)
            if vw == v + w:
                continue
            for u in words:
                if R.multiply(R.multiply(u, v), w) != R.multiply(u, vw):
                    return u, v, w
    return None


def _push_batch(red, stack, lens, letters, sl):
    """Push ``letters[i, :sl[i]]`` onto each stack row, reducing as it goes."""
    n = red.shape[1]
    for j in range(letters.shape[1]):
        live = np.nonzero(sl > j)[0]
        if not live.size:
            break
        c = letters[live, j].copy()
        idx, cc = live, c
        done_idx, done_c = [], []
        while idx.size:
            ln = lens[idx]
            top = np.where(ln > 0, stack[idx, np.maximum(ln - 1, 0)], n)
            r = red[top, cc]
            act = r >= 0
            done_idx.append(idx[~act])
            done_c.append(cc[~act])
            idx, cc = idx[act], r[act]
            lens[idx] -= 1
        idx = np.concatenate(done_idx)
        cc = np.concatenate(done_c)
        stack[idx, lens[idx]] = cc
        lens[idx] += 1


def _word_matrix(ws, width):
    out = np.full((len(ws), max(width, 1)), -1, dtype=np.int64)
    for i, w in enumerate(ws):
        out[i, :len(w)] = w
    return out, np.array([len(w) for w in ws], dtype=np.int64)


def _assoc_numpy(R, words, chunk=1 << 20):
    """Same sweep as :func:`_assoc_python` on numpy batches.

    ``(uv)w = nf(u+v+w)`` and ``u(vw) = nf(u+nf(v+w))``, so triples are
    grouped by the concatenation ``s = v+w``; the witness is the first
    failing ``(v, w)`` in sweep order with its least failing ``u``.
    """
    n = R.P.n_classes
    red = np.full((n + 1, n), -1, dtype=np.int64)
    for a in range(n):
        for b in range(n):
            r = R.rs.pair_reducts(a, b)
            if r:
                red[a, b] = min(r)
    first = {}
    for v in words:
        for w in words:
            s = v + w
            if s not in first:
                t = R.multiply(v, w)
                if t != s:
                    first[s] = (v, w, t)
    if not first:
        return None
    ss = list(first)
    L = max(len(s) for s in ss)
    U, ul = _word_matrix(words, max(len(u) for u in words))
    nu = len(words)
    width = U.shape[1] + L
    per = max(1, chunk // nu)
    for start in range(0, len(ss), per):
        block = ss[start:start + per]
        S, sl = _word_matrix(block, L)
        T, tl = _word_matrix([first[s][2] for s in block], L)
        k = len(block)
        B = k * nu
        base = np.full((B, width), -1, dtype=np.int64)
        base[:, :U.shape[1]] = np.tile(U, (k, 1))
        lens0 = np.tile(ul, k)
        left, ll = base.copy(), lens0.copy()
        right, rl = base, lens0
        _push_batch(red, left, ll, np.repeat(S, nu, axis=0), np.repeat(sl, nu))
        _push_batch(red, right, rl, np.repeat(T, nu, axis=0), np.repeat(tl, nu))
        mask = np.arange(width)[None, :] < ll[:, None]
        diff = (ll != rl) | ((left != right) & mask).any(axis=1)
        if diff.any():
            bad = np.nonzero(diff.reshape(k, nu))
            order = sorted(zip(bad[0], bad[1]), key=lambda p: (words.index(first[block[p[0]]][0]),
                                                               words.index(first[block[p[0]]][1]), p[1]))
            si, ui = order[0]
            v, w, _ = first[block[si]]
            return words[ui], v, w
    return None


def _run(red, stack, letters):
    """Stack normalization of ``stack + letters``; also the lowest height read."""
    st = list(stack)
    low = len(st)
    for c in letters:
        while st:
            r = red[st[-1]][c]
            if r < 0:
                break
            c = r
            st.pop()
        low = min(low, len(st))
        st.append(c)
    return tuple(st), low


def pair_push_condition(R, max_stack: int):
    """First normal ``x`` (``|x| ≤ max_stack``) and letters ``a, b`` with
    ``push(push(x, a), b) ≠ push(x, ab)``, or None.

    If this returns None then ``(uv)w = u(vw)`` for all normal u, v, w with
    ``|u| + |v| + |w| - 2 ≤ max_stack``: the normalization of ``v+w`` is a
    chain of single pair replacements, and each replacement is invisible to
    a stack ``push(u, prefix)`` of length at most ``max_stack``.  Stacks are
    explored by suffix, extending to the left only while a computation
    reaches the bottom letter.
    """
    n = R.P.n_classes
    red = [[min(r) if (r := R.rs.pair_reducts(a, b)) else -1 for b in range(n)] for a in range(n)]
    for a in range(n):
        for b in range(n):
            c = red[a][b]
            if c < 0:
                continue
            todo = [()]
            while todo:
                xs = todo.pop()
                left, low1 = _run(red, xs, (a, b))
                right, low2 = _run(red, xs, (c,))
                if left != right:
                    return xs, a, b
                if min(low1, low2) == 0 and len(xs) < max_stack:
                    for z in range(n - 1, -1, -1):
                        if not xs or red[z][xs[0]] < 0:
                            todo.append((z,) + xs)
    return None


def check_reflection(R: Reflection, k: int = 3, assoc_k: int | None = None, method: str = "auto") -> Check:
    """Associativity, action laws and ι identities on normal forms up to length k.

    Associativity covers every triple from ``enumerate(assoc_k)`` (default
    ``k``).  ``method="auto"`` first tries :func:`pair_push_condition`,
    which settles all triples at once, and sweeps the triples only when it
    fails; ``"numpy"`` and ``"python"`` always sweep.  The other laws are
    checked on every word of ``enumerate(k)``.
    """
    M, X = R.alpha.monoid, R.alpha.carrier
    words = R.enumerate(k)
    for w in words:
        if R.normalize(w) != w:
            return Check(False, "not_normal", (w,))
    ak = k if assoc_k is None else assoc_k
    aw = words if ak == k else R.enumerate(ak)
    if method == "python":
        bad = _assoc_python(R, aw)
    elif method == "auto" and pair_push_condition(R, 3 * ak - 2) is None:
        bad = None
    else:
        bad = _assoc_numpy(R, aw)
        if bad is not None:
            u, v, w = bad
            if R.multiply(R.multiply(u, v), w) == R.multiply(u, R.multiply(v, w)):
                raise InternalConsistencyError(f"batched associativity check disagrees at {bad}")
    if bad is not None:
        return Check(False, "associativity", bad)
    e = M.identity
    for w in words:
        if R.act(e, w) != w:
            return Check(False, "act_identity", (e, w))
        for m in range(M.n):
            am = R.act(m, w)
            for n in range(M.n):
                if R.act(n, am) != R.act(M.mul(n, m), w):
                    return Check(False, "act_law", (m, n, w))
    for m in range(M.n):
        for u in words:
            mu = R.act(m, u)
            for v in words:
                if R.act(m, R.multiply(u, v)) != R.multiply(mu, R.act(m, v)):
                    return Check(False, "act_homomorphism", (m, u, v))
    for x in range(X.n):
        for y in range(X.n):
            if R.multiply(R.iota(x), R.iota(y)) != R.iota(X.table[x][y]):
                return Check(False, "iota_homomorphism", (x, y))
    for m in range(M.n):
        for x in range(X.n):
            y = R.alpha.maps[m][x]
            if y is not None and R.act(m, R.iota(x)) != R.iota(y):
                return Check(False, "iota_morphism", (m, x))
    for x in range(X.n):
        for y in range(X.n):
            # pullback on length-1 words: normal forms are unique
            for m in range(M.n):
                if R.act(m, R.iota(x)) == R.iota(y) and R.alpha.maps[m][x] != y:
                    return Check(False, "pullback", (m, x, y))
    return Check(True)


# -- zero-sided carriers ------------------------------------------------------------

def left_zero_globalization(alpha: PartialAction, P: MXPartition | None = None):
    """X_M with ``u·v = u`` (``u·v = v`` for a right-zero carrier), plus ι."""
    X = alpha.carrier
    left = is_left_zero(X)
    if not left and not is_right_zero(X):
        raise CarrierError("carrier is neither left-zero nor right-zero")
    P = P or classes_generic(alpha)
    n = P.n_classes
    names = [P.class_name(c) for c in range(n)]
    if left:
        table = [[u] * n for u in range(n)]
    else:
        table = [list(range(n)) for _ in range(n)]
    S = FiniteSemigroup(names, table)
    return GlobalAction(alpha.monoid, S, P.beta), P.iota
