"""Named conditions on partial actions of G^0 and the verdicts built on them.

Every sweep is exhaustive.  ``X^1`` is realized by the virtual identity
``ONE``, listed before the carrier's elements.  Each condition fixes the
nesting order of its quantifiers and reports the first failure met in that
order; the orders are documented per function and never depend on caching
or evaluation strategy.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra_core import ONE, g0_structure, ideal_witness, is_left_zero, is_null, is_right_zero, mul1, with_one
from .mx_quotient import MXPartition, classes_generic
from .partial_action import (
    PartialAction,
    check_ideal_hypotheses,
    ideal_hypotheses_hold,
    unital_hypotheses_hold,
    validate_partial_action,
)
from .report import FAIL, NA, PASS, InternalConsistencyError, Verdict, failed, not_applicable, passed


class CarrierError(ValueError):
    pass


def _g0(alpha):
    return g0_structure(alpha.monoid)


def _is_01(alpha):
    st = _g0(alpha)
    return st is not None and len(st.group) == 1


def _names(alpha, kinds, raw):
    M, X = alpha.monoid, alpha.carrier
    return tuple(M.name(v) if k == "m" else X.name(v) for k, v in zip(kinds, raw))


def _dom_list(alpha, m):
    return sorted(alpha.dom(m))


def _ideal_failure(alpha, ms, which=("dom", "im")):
    X = alpha.carrier
    for m in ms:
        for label in which:
            A = alpha.dom(m) if label == "dom" else alpha.im(m)
            if ideal_witness(X, A) is not None:
                return f"{label} alpha_{alpha.monoid.name(m)} is not an ideal"
    return None


# -- LC1 / LC1' ---------------------------------------------------------------

def _lc1_sweep(alpha, guarded):
    st = _g0(alpha)
    X = alpha.carrier
    t = X.table
    maps = alpha.maps
    for g in st.group:
        ag, agi = maps[g], maps[st.inverse[g]]
        for x in range(X.n):
            for y in _dom_list(alpha, g):
                xy = t[x][y]
                for z in range(X.n):
                    if ag[xy] is None:
                        if guarded:
                            continue
                        return (g, x, y, z)
                    u = t[ag[xy]][z]
                    v = t[ag[y]][z]
                    if agi[u] is None or agi[v] is None:
                        if guarded:
                            continue
                        return (g, x, y, z)
                    if agi[u] != t[x][agi[v]]:
                        return (g, x, y, z)
    return None


def check_lc1(alpha: PartialAction) -> Verdict:
    """``α_{g⁻¹}(α_g(xy)z) = x α_{g⁻¹}(α_g(y)z)`` for ``y ∈ dom α_g``.

    Needs every ``dom α_g`` (g in G) to be an ideal; sweep order (g, x, y, z).
    """
    st = _g0(alpha)
    if st is None:
        return not_applicable("monoid is not of the form G^0")
    bad = _ideal_failure(alpha, st.group, ("dom",))
    if bad:
        return not_applicable(bad + "; see LC1'")
    w = _lc1_sweep(alpha, guarded=False)
    return passed() if w is None else failed(_names(alpha, "mxxx", w), raw=w)


def check_lc1_prime(alpha: PartialAction) -> Verdict:
    """LC1 restricted to the points where both sides are defined."""
    if _g0(alpha) is None:
        return not_applicable("monoid is not of the form G^0")
    w = _lc1_sweep(alpha, guarded=True)
    return passed() if w is None else failed(_names(alpha, "mxxx", w), raw=w)


# -- LC2 / LC2' ---------------------------------------------------------------

def _lc2_sweep(alpha, ms, values):
    st = _g0(alpha)
    X = alpha.carrier
    a0 = alpha.maps[st.zero]
    X1 = with_one(X)
    for m in ms:
        am = alpha.maps[m]
        dom = _dom_list(alpha, m)
        for z in X1:
            for x in X1:
                for y in dom:
                    p = mul1(X, mul1(X, x, y), z)
                    if a0[p] is None:
                        continue
                    q = mul1(X, mul1(X, x, am[y]), z)
                    if a0[q] is None or (values and a0[p] != a0[q]):
                        return (m, x, y, z)
    return None


def check_lc2(alpha: PartialAction) -> Verdict:
    """``xyz ∈ dom α_0 ⟹ xα_m(y)z ∈ dom α_0`` with equal ``α_0`` values.

    Quantifies m in M, y in dom α_m and x, z in X^1; sweep order
    (m, z, x, y).  Witness ``(m, x, y, z)``.
    """
    st = _g0(alpha)
    if st is None:
        return not_applicable("monoid is not of the form G^0")
    w = _lc2_sweep(alpha, range(alpha.monoid.n), values=True)
    return passed() if w is None else failed(_names(alpha, "mxxx", w), raw=w)


def check_lc2_prime(alpha: PartialAction) -> Verdict:
    """Membership part of LC2 over g in G; sweep order (g, z, x, y)."""
    st = _g0(alpha)
    if st is None:
        return not_applicable("monoid is not of the form G^0")
    w = _lc2_sweep(alpha, st.group, values=False)
    return passed() if w is None else failed(_names(alpha, "mxxx", w), raw=w)


# -- LC3 ---------------------------------------------------------------------

def check_lc3(alpha: PartialAction) -> Verdict:
    """``xyz ∉ dom α_0 ⟹ ∃k ∈ G: α_k(xyz) = α_g(x)α_h(y)z``.

    Quantifies g, h in G, x ∈ dom α_g, y ∈ dom α_h, z in X^1.  The sweep
    runs over (g, h, z); within the first (g, h, z) that fails, the witness
    minimizes ``(xyz, y, x)``.  Witness ``(g, h, x, y, z)``; the detail
    records ``xyz`` and the unreachable target ``α_g(x)α_h(y)z``.
    """
    st = _g0(alpha)
    if st is None:
        return not_applicable("monoid is not of the form G^0")
    X = alpha.carrier
    maps = alpha.maps
    a0 = maps[st.zero]
    G = st.group
    for g in G:
        ag = maps[g]
        for h in G:
            ah = maps[h]
            for z in with_one(X):
                best = None
                for x in _dom_list(alpha, g):
                    for y in _dom_list(alpha, h):
                        p = mul1(X, X.table[x][y], z)
                        if a0[p] is not None:
                            continue
                        target = mul1(X, X.table[ag[x]][ah[y]], z)
                        if any(maps[k][p] == target for k in G):
                            continue
                        key = (p, y, x)
                        if best is None or key < best[0]:
                            best = (key, target)
                if best is not None:
                    (p, y, x), target = best
                    raw = (g, h, x, y, z)
                    return failed(_names(alpha, "mmxxx", raw), raw=raw,
                                  xyz=X.name(p), target=X.name(target))
    return passed()


# -- H ------------------------------------------------------------------------

def check_h(alpha: PartialAction) -> Verdict:
    """``α_0(xyz) = xα_0(y)z`` for ``y ∈ dom α_0`` and x, z in X^1.

    Only for M = {1,0} with im α_0 an ideal.  Triples with ``xyz`` outside
    dom α_0 carry no constraint (they are excluded in the LC2 form this
    condition replaces).  Sweep order (z, x, y); witness ``(x, y, z)``.
    """
    if not _is_01(alpha):
        return not_applicable("monoid is not {1,0}")
    st = _g0(alpha)
    z0 = st.zero
    if ideal_witness(alpha.carrier, alpha.im(z0)) is not None:
        return not_applicable("im alpha_0 is not an ideal")
    X = alpha.carrier
    a0 = alpha.maps[z0]
    X1 = with_one(X)
    dom = _dom_list(alpha, z0)
    for z in X1:
        for x in X1:
            for y in dom:
                p = mul1(X, mul1(X, x, y), z)
                if a0[p] is None:
                    continue
                if a0[p] != mul1(X, mul1(X, x, a0[y]), z):
                    raw = (x, y, z)
                    return failed(_names(alpha, "xxx", raw), raw=raw)
    return passed()


# -- left-zero condition --------------------------------------------------------

def check_left_zero_condition(alpha: PartialAction, P: MXPartition | None = None) -> Verdict:
    """``[m,X] ∩ [n,X] ≠ ∅ ⟹ ∀u ∈ [m,X] ∀v ∈ [n,X] ∃k: u, v ∈ [k,X]``.

    For left-zero or right-zero carriers.  Sweep (m, n, u, v) in index
    order; witness ``(m, n, u, v)`` with u, v as class names.
    """
    X = alpha.carrier
    if not (is_left_zero(X) or is_right_zero(X)):
        raise CarrierError("carrier is neither left-zero nor right-zero")
    P = P or classes_generic(alpha)
    M = alpha.monoid
    img = [P.image_classes(m) for m in range(M.n)]
    for m in range(M.n):
        for n in range(M.n):
            if img[m].isdisjoint(img[n]):
                continue
            for u in sorted(img[m]):
                for v in sorted(img[n]):
                    if not any(u in img[k] and v in img[k] for k in range(M.n)):
                        raw = (m, n, u, v)
                        return failed((M.name(m), M.name(n), P.class_name(u), P.class_name(v)), raw=raw)
    return passed()


# -- theorem-level verdicts --------------------------------------------------------

def _conj(pairs):
    """Pass if every verdict passes, else fail carrying the first failure."""
    for name, v in pairs:
        if v.status != PASS:
            if v.status == NA:
                return not_applicable(f"{name}: {v.reason}")
            return Verdict(FAIL, v.witness, detail={"by": name}, raw=v.raw)
    return passed(by=[n for n, _ in pairs])


def decide_g0(alpha: PartialAction, conditions: dict | None = None) -> dict:
    """Globalizable iff LC1 ∧ LC2; locally confluent iff LC1 ∧ LC2 ∧ LC3.

    Both need ``M = G^0`` with every dom α_m and im α_m an ideal.
    """
    st = _g0(alpha)
    if st is None:
        na = not_applicable("monoid is not of the form G^0")
        return {"globalizable": na, "locally_confluent": na}
    bad = _ideal_failure(alpha, range(alpha.monoid.n))
    if bad:
        na = not_applicable(bad)
        return {"globalizable": na, "locally_confluent": na}
    c = conditions or {}
    lc1 = c.get("LC1") or check_lc1(alpha)
    lc2 = c.get("LC2") or check_lc2(alpha)
    lc3 = c.get("LC3") or check_lc3(alpha)
    return {
        "globalizable": _conj([("LC1", lc1), ("LC2", lc2)]),
        "locally_confluent": _conj([("LC1", lc1), ("LC2", lc2), ("LC3", lc3)]),
    }


def decide_unital(alpha: PartialAction, lc2p: Verdict | None = None) -> Verdict:
    """With all domains and images unital ideals: globalizable iff LC2'."""
    st = _g0(alpha)
    if st is None:
        return not_applicable("monoid is not of the form G^0")
    if not unital_hypotheses_hold(alpha):
        return not_applicable("some dom alpha_m or im alpha_m is not a unital ideal")
    return _conj([("LC2'", lc2p or check_lc2_prime(alpha))])


def decide_01(alpha: PartialAction) -> Verdict:
    """For M = {1,0} with dom and im of α_0 ideals, three verdicts coincide.

    (H), local confluence of the rewriting system, and globalizability
    (LC1 ∧ LC2) are all computed; a disagreement raises
    ``InternalConsistencyError``.
    """
    from .rewriting import is_locally_confluent

    if not _is_01(alpha):
        return not_applicable("monoid is not {1,0}")
    z0 = _g0(alpha).zero
    bad = _ideal_failure(alpha, [z0])
    if bad:
        return not_applicable(bad)
    h = check_h(alpha)
    conf = is_locally_confluent(alpha)
    glob = decide_g0(alpha)["globalizable"]
    flags = (h.ok, conf.locally_confluent, glob.ok)
    if len(set(flags)) != 1:
        raise InternalConsistencyError(f"(H), confluence and globalizability disagree: {flags}")
    if h.ok:
        return passed(by=["H", "local_confluence", "LC1+LC2"])
    return Verdict(FAIL, h.witness, detail={"by": "H"}, raw=h.raw)


# -- report ---------------------------------------------------------------------

CONDITIONS = ("LC1", "LC1'", "LC2", "LC2'", "LC3", "H", "left_zero")


@dataclass
class CriteriaReport:
    axioms: dict = field(default_factory=dict)
    hypotheses: dict = field(default_factory=dict)
    conditions: dict = field(default_factory=dict)
    theorems: dict = field(default_factory=dict)
    confluence: Verdict | None = None

    @property
    def globalizable(self) -> Verdict:
        return self.theorems.get("globalizable", not_applicable("not computed"))

    def to_dict(self) -> dict:
        return {
            "axioms": {k: v.to_dict() for k, v in self.axioms.items()},
            "hypotheses": self.hypotheses,
            "conditions": {k: v.to_dict() for k, v in self.conditions.items()},
            "theorems": {k: v.to_dict() for k, v in self.theorems.items()},
            "confluence": self.confluence.to_dict() if self.confluence is not None else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CriteriaReport":
        conf = d.get("confluence")
        return cls(
            {k: Verdict.from_dict(v) for k, v in d.get("axioms", {}).items()},
            dict(d.get("hypotheses", {})),
            {k: Verdict.from_dict(v) for k, v in d.get("conditions", {}).items()},
            {k: Verdict.from_dict(v) for k, v in d.get("theorems", {}).items()},
            Verdict.from_dict(conf) if conf is not None else None,
        )


def confluence_verdict(alpha: PartialAction, P: MXPartition | None = None, cap=None) -> Verdict:
    from .rewriting import RewritingSystem, is_locally_confluent

    P = P or classes_generic(alpha)
    rs = RewritingSystem(P)
    v = is_locally_confluent(rs, cap=cap)
    if v.locally_confluent:
        return passed(words_checked=v.words_checked)
    w, w1, w2 = v.witness
    names = (rs.word_name(w), rs.word_name(w1), rs.word_name(w2))
    return failed(
        names,
        raw=v.witness,
        word=[P.member_names(c) for c in w],
        reducts=[[P.member_names(c) for c in u] for u in (w1, w2)],
    )


def _hypotheses(alpha):
    X = alpha.carrier
    st = _g0(alpha)
    ih = check_ideal_hypotheses(alpha)
    return {
        "monoid_g0": st is not None,
        "monoid_01": st is not None and len(st.group) == 1,
        "all_ideal": ih["all_ideal"],
        "all_unital": ih["all_unital"],
        "carrier_left_zero": is_left_zero(X),
        "carrier_right_zero": is_right_zero(X),
        "carrier_null": is_null(X),
        "global": alpha.is_global,
    }


def build_report(alpha: PartialAction, confluence: bool = True, cap=None) -> CriteriaReport:
    """Assemble every applicable verdict and cross-check the theorem sources.

    Globalizability is read from each applicable source: the G^0 ideal
    theorem, the unital-ideal theorem, left/right-zero carriers, null
    carriers and local confluence.  Sources that apply must agree.
    """
    rep = CriteriaReport()
    rep.axioms = validate_partial_action(alpha)
    if not all(v.ok for v in rep.axioms.values()):
        rep.hypotheses = {"valid": False}
        na = not_applicable("not a strong partial action")
        rep.theorems = {"globalizable": na, "locally_confluent_predicted": na}
        return rep
    hyp = _hypotheses(alpha)
    hyp["valid"] = True
    rep.hypotheses = hyp
    X = alpha.carrier
    P = classes_generic(alpha)
    c = {
        "LC1": check_lc1(alpha),
        "LC1'": check_lc1_prime(alpha),
        "LC2": check_lc2(alpha),
        "LC2'": check_lc2_prime(alpha),
        "LC3": check_lc3(alpha),
        "H": check_h(alpha),
    }
    if is_left_zero(X) or is_right_zero(X):
        c["left_zero"] = check_left_zero_condition(alpha, P)
    else:
        c["left_zero"] = not_applicable("carrier is neither left-zero nor right-zero")
    rep.conditions = c

    if confluence:
        rep.confluence = confluence_verdict(alpha, P, cap=cap)

    sources = []
    g0 = decide_g0(alpha, c)
    if g0["globalizable"].status != NA:
        sources.append(("G0_ideal_theorem", g0["globalizable"]))
    un = decide_unital(alpha, c["LC2'"])
    if un.status != NA:
        sources.append(("unital_ideal_theorem", un))
    if hyp["carrier_left_zero"] or hyp["carrier_right_zero"]:
        sources.append(("zero_sided_carrier", passed()))
    if hyp["carrier_null"]:
        sources.append(("null_carrier", passed()))
    if rep.confluence is not None and rep.confluence.ok:
        sources.append(("local_confluence", passed()))
    if hyp["global"]:
        sources.append(("global_action", passed()))

    if sources:
        statuses = {v.status for _, v in sources}
        if len(statuses) != 1:
            raise InternalConsistencyError(
                "globalizability sources disagree: " + ", ".join(f"{n}={v.status}" for n, v in sources)
            )
        name, v = sources[0]
        detail = dict(v.detail)
        detail["source"] = name
        detail["sources"] = [n for n, _ in sources]
        glob = Verdict(v.status, v.witness, detail=detail, raw=v.raw)
    else:
        glob = not_applicable("no globalizability criterion applies to this action")

    pred = g0["locally_confluent"]
    if rep.confluence is not None and pred.status != NA and pred.ok != rep.confluence.ok:
        raise InternalConsistencyError("LC1 ∧ LC2 ∧ LC3 disagrees with the rewriting system")
    rep.theorems = {"globalizable": glob, "locally_confluent_predicted": pred}
    if hyp["monoid_01"] and g0["globalizable"].status != NA:
        rep.theorems["three_way_01"] = decide_01(alpha)
    return rep
