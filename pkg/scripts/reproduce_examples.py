"""Print the verdicts for the named fixtures: EX1, EX2, EX3, EX4, LZ-*, NULL-*.

Usage: python scripts/reproduce_examples.py [NAME ...]
"""

import sys

from parwb import globalization as gl
from parwb import mx_quotient as mq
from parwb import rewriting as rw
from parwb import workbench as wb
from parwb.criteria import build_report
from parwb.falgebra import decide_globalizable_algebra01, semigroup_view


def show_action(name, alpha):
    rep = build_report(alpha)
    print(f"== {name}: |M| = {alpha.monoid.n}, |X| = {alpha.carrier.n}")
    for k, v in {**rep.conditions, **rep.theorems}.items():
        extra = v.witness if v.witness is not None else (v.reason or "")
        print(f"   {k:<28} {v.status:<15} {extra}")
    P = mq.classes_generic(alpha)
    rs = rw.RewritingSystem(P)
    conf = rw.is_locally_confluent(rs)
    print(f"   X_M has {P.n_classes} classes; locally confluent: {conf.locally_confluent}")
    if conf.witness is not None:
        w, w1, w2 = conf.witness
        print(f"   peak {rs.word_name(w)} -> {rs.word_name(w1)} | {rs.word_name(w2)}")
        r = rw.unique_nf_condition(rs, max_len=6)
        print(f"   unique normal forms: {r.status}")
        if r.chain:
            print("   chain " + " <-> ".join(rs.word_name(v) for v in r.chain))
    else:
        R = gl.reflection_nf_semigroup(alpha, P)
        chk = gl.check_reflection(R, 2)
        print(f"   reflection: {len(R.enumerate(2))} normal forms of length <= 2, laws hold: {chk.ok}")


def show_algebra(name, pa):
    A = pa.algebra
    v = decide_globalizable_algebra01(pa)
    print(f"== {name}: dim {A.dim} over F_{A.p}")
    print("   ker alpha_0 = span{" + ", ".join(A.vector_name(k) for k in pa.kernel) + "}")
    print(f"   algebra verdict: {v.status} {v.witness or ''}")
    s = build_report(semigroup_view(pa), confluence=False).globalizable
    print(f"   semigroup verdict: {s.status}")


def main(argv):
    reg = wb.fixture_registry()
    names = argv or list(reg)
    for name in names:
        if name not in reg:
            raise SystemExit(f"unknown fixture {name!r}; choose from {', '.join(reg)}")
        if name == "EX3":
            show_algebra(name, reg[name])
        else:
            show_action(name, reg[name])


if __name__ == "__main__":
    main(sys.argv[1:])
