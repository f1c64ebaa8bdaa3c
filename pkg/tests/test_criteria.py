import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parwb import algebra_core as ac
from parwb import criteria as cr
from parwb import partial_action as pa
from parwb import rewriting as rw
from parwb import workbench as wb
from parwb.report import FAIL, NA, PASS, Verdict

import oracles
from strategies import MONOIDS, actions, g0_actions, g0_ideal_actions, semigroups

one_zero_ideal = st.sampled_from([a for a in actions("10", 3) if pa.ideal_hypotheses_hold(a)])
unital_dom0 = st.sampled_from([
    a for k in ("10", "C2_0") for a in actions(k, 3)
    if ac.is_unital_ideal(a.carrier, a.dom(ac.g0_structure(a.monoid).zero))[0]
])


def _args(alpha):
    M = alpha.monoid
    s = ac.g0_structure(M)
    return M.table, M.identity, s.zero, alpha.carrier.table, alpha.maps


def _raw1(t):
    # oracle's adjoined identity is "1"; the package's is ONE
    return tuple(ac.ONE if v == oracles.ONE else v for v in t)


def _dom_g_ideal(alpha):
    s = ac.g0_structure(alpha.monoid)
    return all(ac.is_ideal(alpha.carrier, alpha.dom(g)) for g in s.group)


# -- LC1 ---------------------------------------------------------------------

def test_lc1_trivial_group_passes_on_every_instance():
    for a in actions("10", 3):
        v = cr.check_lc1(a)
        assert v.status in (PASS, NA)
        if _dom_g_ideal(a):
            assert v.ok


def test_lc1_on_fixtures(ex1, ex2):
    assert cr.check_lc1(ex1).ok and cr.check_lc1(ex2).ok


@given(g0_actions)
def test_lc1_matches_brute_force(alpha):
    mt, e, z, t, maps = _args(alpha)
    bad = oracles.lc1_violations(mt, e, z, t, maps)
    v = cr.check_lc1(alpha)
    if not _dom_g_ideal(alpha):
        assert v.status == NA and "LC1'" in v.reason
    elif bad:
        assert v.failed and v.raw == min(bad)
    else:
        assert v.ok
    good = oracles.lc1_violations(mt, e, z, t, maps, guarded=True)
    vp = cr.check_lc1_prime(alpha)
    assert (vp.raw == min(good)) if good else vp.ok


# -- LC2 / LC2' ------------------------------------------------------------------

def _lc2_key(w):
    m, x, y, z = w
    return (m, z, x, y)


@given(g0_actions)
def test_lc2_matches_brute_force(alpha):
    mt, e, z, t, maps = _args(alpha)
    bad = {_raw1(w) for w in oracles.lc2_violations(mt, z, t, maps)}
    v = cr.check_lc2(alpha)
    assert (v.failed and v.raw == min(bad, key=_lc2_key)) if bad else v.ok
    G = oracles.group_part(mt, z)
    bad = {_raw1(w) for w in oracles.lc2_violations(mt, z, t, maps, ms=G, values=False)}
    v = cr.check_lc2_prime(alpha)
    assert (v.failed and v.raw == min(bad, key=_lc2_key)) if bad else v.ok


def test_lc2_vacuous_with_empty_zero_domain(ex1, registry):
    assert cr.check_lc2(ex1).ok and cr.check_lc2(registry["LZ-pos"]).ok


def test_lc2_fails_on_ex2(ex2):
    v = cr.check_lc2(ex2)
    assert v.failed and v.witness == ("g", "(0,1,0)", "(1,0,0)", "1")
    X = ex2.carrier
    x, y = X.index("(0,1,0)"), X.index("(1,0,0)")
    assert X.name(X.mul(x, y)) == "(0,0,0)" and ex2.apply(2, X.mul(x, y)) is not None
    assert ex2.apply(2, X.mul(x, ex2.apply(1, y))) is None
    vp = cr.check_lc2_prime(ex2)
    assert vp.failed and vp.witness == v.witness


def test_lc2_fails_on_ex3_semigroup(ex3s):
    v = cr.check_lc2(ex3s)
    assert v.failed and v.witness == ("0", "E12", "E23", "1")


def test_lc2_prime_passes_on_ex4(registry):
    assert cr.check_lc2_prime(registry["EX4"]).ok
    assert cr.check_lc2(registry["EX4"]).ok


def test_lc2_prime_vacuous_for_trivial_group():
    assert all(cr.check_lc2_prime(a).ok for a in actions("10", 3))


@given(unital_dom0)
def test_lc2_equals_lc2_prime_when_dom0_unital(alpha):
    assert cr.check_lc2(alpha).ok == cr.check_lc2_prime(alpha).ok


# -- LC3 ----------------------------------------------------------------------------

@given(g0_actions)
def test_lc3_matches_brute_force(alpha):
    mt, e, z, t, maps = _args(alpha)
    bad = {_raw1(w) for w in oracles.lc3_violations(mt, z, t, maps)}
    v = cr.check_lc3(alpha)
    if not bad:
        assert v.ok
        return
    X = alpha.carrier

    def key(w):
        g, h, x, y, zz = w
        return (g, h, zz, ac.mul1(X, X.table[x][y], zz), y, x)

    assert v.failed and v.raw == min(bad, key=key)


def test_lc3_trivial_group_passes():
    assert all(cr.check_lc3(a).ok for a in actions("10", 3))


def test_lc3_fails_on_ex1(ex1):
    v = cr.check_lc3(ex1)
    assert v.failed
    assert v.witness == ("1", "g", "(2,0)", "(0,2)", "1")
    assert v.detail == {"xyz": "(0,0)", "target": "(4,0)"}


def test_lc3_on_group_global_actions():
    M = wb.monoid_c2_zero()
    for X in semigroups(3):
        for a in wb.enumerate_partial_actions(M, X):
            if a.dom(2) or not all(len(a.dom(g)) == X.n for g in (0, 1)):
                continue
            mt, e, z, t, maps = _args(a)
            assert cr.check_lc3(a).ok == (not oracles.lc3_violations(mt, z, t, maps))


# -- H ---------------------------------------------------------------------------------

@given(one_zero_ideal)
def test_h_matches_brute_force(alpha):
    mt, e, z, t, maps = _args(alpha)
    bad = {_raw1(w) for w in oracles.h_violations(z, t, maps)}
    v = cr.check_h(alpha)
    assert (v.failed and v.raw == min(bad, key=lambda w: (w[2], w[0], w[1]))) if bad else v.ok


def test_h_on_null_carriers():
    M = wb.monoid_one_zero()
    for n in (1, 2, 3, 4):
        for a in wb.enumerate_partial_actions(M, ac.null(n)):
            v = cr.check_h(a)
            assert v.ok or v.status == NA


def test_h_fails_on_ex3_semigroup(ex3s):
    v = cr.check_h(ex3s)
    assert v.failed and v.witness == ("E12", "E23", "1")


def test_h_empty_domain_passes(registry):
    assert cr.check_h(registry["LZ-01"]).ok


def test_h_needs_one_zero(ex1):
    assert cr.check_h(ex1).status == NA


# -- left-zero condition --------------------------------------------------------------

def _zero_sided():
    out = []
    for k in (1, 2, 3):
        for M in ac.all_monoids(k):
            for X in (ac.left_zero(1), ac.left_zero(2), ac.left_zero(3), ac.right_zero(2)):
                out.extend(wb.enumerate_partial_actions(M, X))
    return out


def test_left_zero_condition_matches_brute_force():
    from parwb import mx_quotient as mq

    for a in _zero_sided():
        P = mq.classes_generic(a)
        expect = oracles.left_zero_condition(a.monoid.table, a.carrier.n, P.blocks())
        assert cr.check_left_zero_condition(a, P).ok == expect


def test_left_zero_condition_with_trivial_action():
    for k in (1, 2, 3):
        for M in ac.all_monoids(k):
            a = pa.from_partial_maps(M, ac.left_zero(3), {})
            assert cr.check_left_zero_condition(a).ok


def test_left_zero_condition_on_fixtures(registry):
    v = cr.check_left_zero_condition(registry["LZ-neg"])
    assert v.failed and v.witness == ("1", "g", "[1,b]", "[g,b]")
    assert cr.check_left_zero_condition(registry["LZ-pos"]).ok


def test_left_zero_condition_needs_zero_sided_carrier(ex1):
    with pytest.raises(cr.CarrierError):
        cr.check_left_zero_condition(ex1)


# -- theorem verdicts -----------------------------------------------------------------

def test_decide_g0_on_fixtures(ex1, ex2):
    d = cr.decide_g0(ex1)
    assert d["globalizable"].ok and d["locally_confluent"].failed
    assert d["locally_confluent"].detail["by"] == "LC3"
    d = cr.decide_g0(ex2)
    assert d["globalizable"].failed and d["globalizable"].detail["by"] == "LC2"


def test_decide_g0_gating():
    d = cr.decide_g0(wb.fixture_lz_neg())
    assert d["globalizable"].status == NA
    M = wb.monoid_one_zero()
    X = ac.mult_mod(4)
    a = pa.PartialAction(M, X, ((0, 1, 2, 3), (None, 1, None, None)))
    assert pa.is_valid(a)
    d = cr.decide_g0(a)
    assert d["globalizable"].status == NA and "dom alpha_0" in d["globalizable"].reason


def test_unital_one_zero_instances_are_globalizable():
    inst = [a for a in actions("10", 3) if pa.unital_hypotheses_hold(a)]
    assert inst
    for a in inst:
        assert cr.decide_g0(a)["globalizable"].ok
        assert cr.decide_unital(a).ok


@given(g0_ideal_actions)
def test_unital_theorem_agrees_with_g0_theorem(alpha):
    u = cr.decide_unital(alpha)
    if u.status != NA:
        assert u.ok == cr.decide_g0(alpha)["globalizable"].ok


def test_decide_01_examples(ex3s, registry):
    assert cr.decide_01(registry["NULL-2"]).status == NA  # C2^0
    M = wb.monoid_one_zero()
    for n in (2, 3):
        for a in wb.enumerate_partial_actions(M, ac.null(n), ("ideal",)):
            assert cr.decide_01(a).ok
    v = cr.decide_01(ex3s)
    assert v.failed and v.witness == ("E12", "E23", "1")
    assert cr.decide_01(registry["LZ-01"]).ok


@given(g0_ideal_actions)
def test_confluence_prediction_matches_rewriting(alpha):
    d = cr.decide_g0(alpha)
    assert d["locally_confluent"].ok == rw.is_locally_confluent(alpha).locally_confluent


@given(g0_ideal_actions)
def test_globalizable_never_violates_unique_normal_forms(alpha):
    if cr.decide_g0(alpha)["globalizable"].ok:
        assert rw.unique_nf_condition(alpha, max_len=4, max_visited=2000).status != rw.VIOLATED


@pytest.mark.parametrize("name", ["EX2", "EX3-semigroup"])
def test_non_globalizable_fixtures_have_violation_chains(registry, name):
    alpha = registry[name]
    assert cr.decide_g0(alpha)["globalizable"].failed
    assert rw.unique_nf_condition(alpha).status == rw.VIOLATED


def test_non_g0_monoids_not_applicable():
    a = wb.fixture_lz_neg()
    for f in (cr.check_lc1, cr.check_lc1_prime, cr.check_lc2, cr.check_lc2_prime, cr.check_lc3, cr.check_h):
        assert f(a).status == NA


# -- report --------------------------------------------------------------------------------

def test_report_for_ex1(ex1):
    r = cr.build_report(ex1)
    assert r.globalizable.ok
    assert r.conditions["LC3"].failed
    assert r.confluence.failed
    assert r.theorems["locally_confluent_predicted"].failed
    assert set(r.globalizable.detail["sources"]) == {"G0_ideal_theorem"}


def test_report_for_invalid_action():
    a = pa.PartialAction(wb.monoid_one_zero(), ac.left_zero(2), ((0, 1), (1, 0)))
    r = cr.build_report(a)
    assert r.hypotheses == {"valid": False}
    assert r.globalizable.status == NA and r.axioms["PA3"].failed


@given(g0_actions | st.sampled_from(actions("C2", 3)))
def test_report_shape(alpha):
    r = cr.build_report(alpha)
    for v in list(r.conditions.values()) + list(r.theorems.values()) + [r.confluence]:
        assert v.status in (PASS, FAIL, NA)
        if v.status == FAIL:
            assert v.witness and all(isinstance(s, str) for s in v.witness)
        if v.status == NA:
            assert v.reason
    d = r.to_dict()
    assert cr.CriteriaReport.from_dict(json.loads(json.dumps(d))).to_dict() == d
    if not r.hypotheses["all_ideal"] and r.globalizable.status != NA:
        assert "G0_ideal_theorem" not in r.globalizable.detail["sources"]


def test_verdict_round_trip():
    v = Verdict(FAIL, ("a", "b"), detail={"k": 1})
    assert Verdict.from_dict(v.to_dict()) == v
