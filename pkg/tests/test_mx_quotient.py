import itertools

import pytest
from hypothesis import given

from parwb import algebra_core as ac
from parwb import mx_quotient as mq
from parwb import partial_action as pa
from parwb import workbench as wb

import oracles
from strategies import MONOIDS, actions, any_actions, g0_actions


def _oracle_blocks(alpha):
    return oracles.classes(alpha.monoid.table, alpha.carrier.table, alpha.maps)


def _pair(alpha, m, x):
    return (alpha.monoid.index(m), alpha.carrier.index(x))


@given(any_actions)
def test_identity_gives_loops(alpha):
    edges = set(mq.harpoon_edges(alpha))
    for m, x in itertools.product(range(alpha.monoid.n), range(alpha.carrier.n)):
        assert ((m, x), (m, x)) in edges


def test_ex1_edge_through_g(ex1):
    edges = set(mq.harpoon_edges(ex1))
    assert (_pair(ex1, "0", "(0,2)"), _pair(ex1, "0", "(2,0)")) in edges


def test_group_global_edges_follow_the_action():
    M = MONOIDS["C2"]()
    inv = ac.group_inverses(M)
    for X in (ac.null(2), ac.left_zero(2), ac.mult_mod(3)):
        for alpha in wb.enumerate_global_actions(M, X):
            edges = set(mq.harpoon_edges(alpha))
            expect = {
                ((m, x), (n, alpha.apply(M.mul(inv[n], m), x)))
                for m in range(M.n) for n in range(M.n) for x in range(X.n)
            }
            assert edges == expect


@given(any_actions)
def test_generic_classes_match_graph_search(alpha):
    P = mq.classes_generic(alpha)
    assert P.blocks() == _oracle_blocks(alpha)


def test_group_global_classes_are_orbits_of_size_m():
    for key in ("C2", "C3"):
        M = MONOIDS[key]()
        for X in (ac.null(3), ac.mult_mod(3), ac.left_zero(2)):
            for alpha in wb.enumerate_global_actions(M, X):
                P = mq.classes_generic(alpha)
                assert all(len(ms) == M.n for ms in P.members)
                assert P.n_classes == X.n


def test_trivial_action_gives_singletons():
    M = wb.monoid_c2_zero()
    alpha = pa.from_partial_maps(M, ac.mult_mod(4), {})
    assert pa.is_valid(alpha)
    P = mq.classes_generic(alpha)
    assert P.n_classes == M.n * 4
    assert all(len(ms) == 1 for ms in P.members)


def test_ex1_zero_class_is_a_singleton(ex1):
    P = mq.classes_generic(ex1)
    m, x = _pair(ex1, "0", "(0,0)")
    assert P.members[P.cls(m, x)] == ((m, x),)
    assert P.class_name(P.cls(m, x)) == "[0,(0,0)]"
    a, b = _pair(ex1, "0", "(0,4)"), _pair(ex1, "0", "(4,0)")
    assert P.cls(*a) == P.cls(*b)


def test_class_ids_follow_least_pair(registry):
    for name, alpha in registry.items():
        if name == "EX3":
            continue
        P = mq.classes_generic(alpha)
        firsts = [ms[0] for ms in P.members]
        assert firsts == sorted(firsts)
        assert all(list(ms) == sorted(ms) for ms in P.members)


@given(g0_actions)
def test_image_of_alpha0_merges_the_column(alpha):
    st = ac.g0_structure(alpha.monoid)
    P = mq.classes_g0_closed_form(alpha)
    for x in alpha.im(st.zero):
        c = P.cls(st.identity, x)
        for m in range(alpha.monoid.n):
            assert P.cls(m, x) == c


@given(g0_actions)
def test_zero_class_outside_dom_alpha0(alpha):
    st = ac.g0_structure(alpha.monoid)
    P = mq.classes_g0_closed_form(alpha)
    for x in range(alpha.carrier.n):
        if alpha.apply(st.zero, x) is not None:
            continue
        expect = {(st.zero, alpha.apply(g, x)) for g in st.group if alpha.apply(g, x) is not None}
        assert set(P.members[P.cls(st.zero, x)]) == expect


@pytest.mark.parametrize("key", ["10", "C2_0", "C3_0"])
def test_closed_form_matches_generic_exhaustively(key):
    disagreements = sum(
        not mq.classes_generic(a).same_partition(mq.classes_g0_closed_form(a)) for a in actions(key, 3)
    )
    assert disagreements == 0


def test_closed_form_needs_g0():
    with pytest.raises(pa.ActionError):
        mq.classes_g0_closed_form(wb.fixture_lz_neg())


@given(any_actions)
def test_beta_and_iota_laws(alpha):
    M = alpha.monoid
    P = mq.classes_generic(alpha)
    cs = range(P.n_classes)
    assert [mq.beta_of(P, M.identity, c) for c in cs] == list(cs)
    for m, n in itertools.product(range(M.n), repeat=2):
        for c in cs:
            assert mq.beta_of(P, n, mq.beta_of(P, m, c)) == mq.beta_of(P, M.mul(n, m), c)
    for m in range(M.n):
        for x in alpha.dom(m):
            assert mq.iota_of(P, alpha.apply(m, x)) == mq.beta_of(P, m, mq.iota_of(P, x))
    for x in range(alpha.carrier.n):
        assert mq.iota_of(P, x) == P.cls(M.identity, x)


@given(g0_actions)
def test_zero_absorbs_beta(alpha):
    st = ac.g0_structure(alpha.monoid)
    P = mq.classes_generic(alpha)
    for g in st.group:
        for c in range(P.n_classes):
            assert P.beta[st.zero][P.beta[g][c]] == P.beta[st.zero][c]


@given(any_actions)
def test_beta_is_well_defined_on_brute_force_classes(alpha):
    M = alpha.monoid
    look = oracles.class_lookup(_oracle_blocks(alpha))
    for block in set(look.values()):
        for (m, x), (m2, x2) in itertools.combinations(sorted(block), 2):
            for n in range(M.n):
                assert look[(M.mul(n, m), x)] == look[(M.mul(n, m2), x2)]


def test_display_helpers(ex1):
    P = mq.classes_generic(ex1)
    c = P.cls(*_pair(ex1, "0", "(0,2)"))
    assert P.member_names(c) == ["(0,(0,2))", "(0,(2,0))"]
    assert P.class_name(c) == "[0,(0,2)]"
    g = ex1.monoid.index("g")
    assert P.image_classes(g) == frozenset(P.iota)
