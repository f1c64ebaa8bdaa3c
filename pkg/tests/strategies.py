"""Hypothesis strategies drawing from the exhaustive small-instance lists."""

import functools

from hypothesis import strategies as st

from parwb import algebra_core as ac
from parwb import workbench as wb


@functools.lru_cache(maxsize=None)
def semigroups(max_n=3):
    return tuple(S for n in range(1, max_n + 1) for S in ac.all_semigroups(n))


@functools.lru_cache(maxsize=None)
def actions(monoid_key, max_n=3, filters=()):
    M = MONOIDS[monoid_key]()
    return tuple(a for X in semigroups(max_n) for a in wb.enumerate_partial_actions(M, X, filters))


MONOIDS = {
    "10": wb.monoid_one_zero,
    "C2_0": wb.monoid_c2_zero,
    "C2": lambda: ac.cyclic_group(2).base,
    "C3": lambda: ac.cyclic_group(3).base,
    "C3_0": lambda: ac.make_g0(ac.cyclic_group(3)),
}


def action_from(keys, max_n=3, filters=()):
    return st.sampled_from(keys).flatmap(lambda k: st.sampled_from(actions(k, max_n, filters)))


g0_actions = action_from(("10", "C2_0"))
g0_ideal_actions = action_from(("10", "C2_0"), filters=("ideal",))
any_actions = action_from(("10", "C2_0", "C2", "C3"), max_n=2) | action_from(("10", "C2_0"))
semigroup = st.sampled_from(semigroups(3))
