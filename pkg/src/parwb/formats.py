"""JSON formats for semigroups, monoids, partial actions and algebras.

A semigroup or monoid may be given inline or as a constructor expression
such as ``"g0(cyclic_group(2))"`` or ``"power(mult_mod(4),3)"``.  Every
parse error carries the JSON path of the offending value.
"""

from __future__ import annotations

import ast
import json

from . import algebra_core as ac
from .falgebra import AlgebraError, FiniteAlgebra, LinearPA01
from .partial_action import ActionError, PartialAction


class FormatError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


def _key(path, k):
    if isinstance(k, int):
        return f"{path}[{k}]"
    if k.isidentifier():
        return f"{path}.{k}"
    return f"{path}[{json.dumps(k)}]"


# -- constructor expressions -------------------------------------------------------

def _one_zero():
    return ac.make_g0(ac.cyclic_group(1))


CONSTRUCTORS = {
    "left_zero": ac.left_zero,
    "right_zero": ac.right_zero,
    "null": ac.null,
    "mult_mod": ac.mult_mod,
    "multiples_mod": ac.multiples_mod,
    "cyclic_group": ac.cyclic_group,
    "direct_product": ac.direct_product,
    "power": ac.power,
    "g0": ac.make_g0,
    "adjoin_identity": ac.adjoin_identity,
    "adjoin_zero": ac.adjoin_zero,
    "upper_triangular_strict_3x3": ac.upper_triangular_strict_3x3,
    "one_zero": _one_zero,
}


def _as_semigroup(v):
    if isinstance(v, ac.FiniteGroup):
        return v.base.base
    if isinstance(v, ac.FiniteMonoid):
        return v.base
    return v


def _as_group(v):
    if isinstance(v, ac.FiniteGroup):
        return v
    return ac.as_group(v if isinstance(v, ac.FiniteMonoid) else ac.as_monoid(v))


def _eval(node, path):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return node.value
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
        fn = CONSTRUCTORS.get(node.func.id)
        if fn is None:
            raise FormatError(path, f"unknown constructor {node.func.id!r}")
        args = [_eval(a, path) for a in node.args]
        name = node.func.id
        if name == "g0":
            args = [_as_group(a) for a in args]
        elif name in ("direct_product", "power", "adjoin_identity", "adjoin_zero"):
            args = [a if isinstance(a, int) else _as_semigroup(a) for a in args]
        try:
            return fn(*args)
        except ac.SizeCapError:
            raise
        except (TypeError, ValueError) as exc:
            raise FormatError(path, f"{name}: {exc}") from None
    raise FormatError(path, "expressions may only contain constructor calls and integers")


def parse_expression(text: str, path: str = "$"):
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError:
        raise FormatError(path, f"cannot parse expression {text!r}") from None
    return _eval(tree.body, path)


# -- semigroups and monoids -----------------------------------------------------------

def _int(v, path):
    if not isinstance(v, int) or isinstance(v, bool):
        raise FormatError(path, f"expected an integer, got {v!r}")
    return v


def _list(v, path):
    if not isinstance(v, list):
        raise FormatError(path, f"expected a list, got {type(v).__name__}")
    return v


def semigroup_from_json(d, path="$") -> ac.FiniteSemigroup:
    if isinstance(d, str):
        return _as_semigroup(parse_expression(d, path))
    if not isinstance(d, dict):
        raise FormatError(path, "expected an object or a constructor expression")
    for k in ("elements", "table"):
        if k not in d:
            raise FormatError(_key(path, k), "missing field")
    els = _list(d["elements"], _key(path, "elements"))
    n = len(els)
    for i, e in enumerate(els):
        if not isinstance(e, str):
            raise FormatError(_key(_key(path, "elements"), i), "element names must be strings")
    if len(set(els)) != n:
        raise FormatError(_key(path, "elements"), "element names must be distinct")
    tp = _key(path, "table")
    rows = _list(d["table"], tp)
    if len(rows) != n:
        raise FormatError(tp, f"expected {n} rows, got {len(rows)}")
    table = []
    for i, row in enumerate(rows):
        rp = _key(tp, i)
        row = _list(row, rp)
        if len(row) != n:
            raise FormatError(rp, f"expected {n} entries, got {len(row)}")
        out = []
        for j, v in enumerate(row):
            ep = _key(rp, j)
            v = _int(v, ep)
            if not 0 <= v < n:
                raise FormatError(ep, f"index {v} out of range [0, {n})")
            out.append(v)
        table.append(out)
    ac._check_cap(n, "semigroup")
    w = ac.associativity_witness(table)
    if w is not None:
        x, y, z = w
        raise FormatError(tp, f"not associative at ({els[x]},{els[y]},{els[z]})")
    return ac.FiniteSemigroup(els, table)


def monoid_from_json(d, path="$") -> ac.FiniteMonoid:
    if isinstance(d, str):
        v = parse_expression(d, path)
        if isinstance(v, ac.FiniteGroup):
            return v.base
        if isinstance(v, ac.FiniteMonoid):
            return v
        try:
            return ac.as_monoid(v)
        except ac.SemigroupError as exc:
            raise FormatError(path, str(exc)) from None
    S = semigroup_from_json(d, path)
    if "identity" in d:
        e = _int(d["identity"], _key(path, "identity"))
        try:
            M = ac.FiniteMonoid(S, e)
        except ac.SemigroupError as exc:
            raise FormatError(_key(path, "identity"), str(exc)) from None
    else:
        try:
            M = ac.as_monoid(S)
        except ac.SemigroupError as exc:
            raise FormatError(path, str(exc)) from None
    if "inverse" in d:
        ip = _key(path, "inverse")
        inv = _list(d["inverse"], ip)
        if len(inv) != M.n:
            raise FormatError(ip, f"expected {M.n} entries, got {len(inv)}")
        for i, v in enumerate(inv):
            v = _int(v, _key(ip, i))
            if not 0 <= v < M.n or M.mul(i, v) != M.identity or M.mul(v, i) != M.identity:
                raise FormatError(_key(ip, i), f"{v!r} is not an inverse of {M.name(i)}")
    return M


def semigroup_to_json(S: ac.FiniteSemigroup) -> dict:
    return {"elements": list(S.elements), "table": [list(r) for r in S.table]}


def monoid_to_json(M: ac.FiniteMonoid) -> dict:
    d = semigroup_to_json(M.base)
    d["identity"] = M.identity
    return d


# -- partial actions ----------------------------------------------------------------------

def action_from_json(d, path="$") -> PartialAction:
    """Parse ``{"monoid", "carrier", "maps"}``.

    Inside ``maps`` omitted pairs are undefined; a monoid element with no
    entry at all is undefined everywhere, except the identity, which then
    defaults to the identity map.
    """
    if not isinstance(d, dict):
        raise FormatError(path, "expected an object")
    for k in ("monoid", "carrier", "maps"):
        if k not in d:
            raise FormatError(_key(path, k), "missing field")
    M = monoid_from_json(d["monoid"], _key(path, "monoid"))
    X = semigroup_from_json(d["carrier"], _key(path, "carrier"))
    mp = _key(path, "maps")
    maps = d["maps"]
    if not isinstance(maps, dict):
        raise FormatError(mp, "expected an object keyed by monoid element names")
    rows = [None] * M.n
    for mname, pairs in maps.items():
        kp = _key(mp, mname)
        if mname not in M.elements:
            raise FormatError(kp, f"unknown monoid element {mname!r}")
        if not isinstance(pairs, dict):
            raise FormatError(kp, "expected an object mapping carrier names to carrier names")
        row = [None] * X.n
        for xname, yname in pairs.items():
            xp = _key(kp, xname)
            if xname not in X.elements:
                raise FormatError(xp, f"unknown carrier element {xname!r}")
            if not isinstance(yname, str) or yname not in X.elements:
                raise FormatError(xp, f"unknown carrier element {yname!r}")
            row[X.index(xname)] = X.index(yname)
        rows[M.index(mname)] = tuple(row)
    for m in range(M.n):
        if rows[m] is None:
            rows[m] = tuple(range(X.n)) if m == M.identity else (None,) * X.n
    try:
        return PartialAction(M, X, tuple(rows))
    except (ActionError, IndexError) as exc:
        raise FormatError(mp, str(exc)) from None


def action_to_json(alpha: PartialAction, inline: bool = True, monoid_ref=None, carrier_ref=None) -> dict:
    M, X = alpha.monoid, alpha.carrier
    maps = {}
    for m in range(M.n):
        maps[M.name(m)] = {X.name(x): X.name(y) for x, y in enumerate(alpha.maps[m]) if y is not None}
    return {
        "monoid": monoid_ref if monoid_ref is not None else monoid_to_json(M),
        "carrier": carrier_ref if carrier_ref is not None else semigroup_to_json(X),
        "maps": maps,
    }


# -- algebras -----------------------------------------------------------------------------

def _matrix(v, path, rows=None, cols=None):
    v = _list(v, path)
    if rows is not None and len(v) != rows:
        raise FormatError(path, f"expected {rows} rows, got {len(v)}")
    out = []
    for i, r in enumerate(v):
        rp = _key(path, i)
        r = _list(r, rp)
        if cols is not None and len(r) != cols:
            raise FormatError(rp, f"expected {cols} entries, got {len(r)}")
        out.append(tuple(_int(x, _key(rp, j)) for j, x in enumerate(r)))
    return out


def algebra_pa_from_json(d, path="$") -> LinearPA01:
    """``{"p", "dim", "structure", "dom0_basis", "alpha0_matrix"}``.

    ``alpha0_matrix[i]`` is the image of ``dom0_basis[i]`` in ambient
    coordinates; ``basis_names`` is optional.
    """
    if not isinstance(d, dict):
        raise FormatError(path, "expected an object")
    for k in ("p", "dim", "structure", "dom0_basis", "alpha0_matrix"):
        if k not in d:
            raise FormatError(_key(path, k), "missing field")
    p = _int(d["p"], _key(path, "p"))
    n = _int(d["dim"], _key(path, "dim"))
    sp = _key(path, "structure")
    planes = _list(d["structure"], sp)
    if len(planes) != n:
        raise FormatError(sp, f"expected {n} planes, got {len(planes)}")
    c = [_matrix(pl, _key(sp, i), n, n) for i, pl in enumerate(planes)]
    names = d.get("basis_names")
    try:
        A = FiniteAlgebra(p, n, c, tuple(names) if names is not None else None)
    except AlgebraError as exc:
        raise FormatError(path, str(exc)) from None
    B = _matrix(d["dom0_basis"], _key(path, "dom0_basis"), None, n)
    Im = _matrix(d["alpha0_matrix"], _key(path, "alpha0_matrix"), len(B), n)
    try:
        return LinearPA01(A, B, Im)
    except AlgebraError as exc:
        raise FormatError(_key(path, "dom0_basis"), str(exc)) from None


def algebra_pa_to_json(pa: LinearPA01) -> dict:
    A = pa.algebra
    return {
        "p": A.p,
        "dim": A.dim,
        "basis_names": list(A.basis_names),
        "structure": [[list(r) for r in pl] for pl in A.structure],
        "dom0_basis": [list(r) for r in pa.dom0_basis],
        "alpha0_matrix": [list(r) for r in pa.alpha0_matrix],
    }


def load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError("$", f"invalid JSON: {exc.msg} at line {exc.lineno}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
